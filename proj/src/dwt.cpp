#include "chaoswm/dwt.hpp"

#include <cmath>

#include "chaoswm/errors.hpp"

namespace chaoswm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

// Level-1/2 Haar coefficients of integer images are exact half- and
// quarter-integers, so .5 ties are the common case, not the corner case. A
// tiny positive bias keeps tie rounding stable against float crumbs of order
// 1e-13 so that both sides of an embed/detect pair integerize identically.
constexpr double kTieEps = 1e-9;

long long round_pixel(double v) {
  return static_cast<long long>(std::floor(v + 0.5 + kTieEps));
}

void haar_rows(Matrix& w, std::size_t rows, std::size_t cols) {
  std::vector<double> tmp(cols);
  std::size_t half = cols / 2;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < half; ++i) {
      double a = w.at(r, 2 * i), b = w.at(r, 2 * i + 1);
      tmp[i] = (a + b) * kInvSqrt2;
      tmp[half + i] = (a - b) * kInvSqrt2;
    }
    for (std::size_t c = 0; c < cols; ++c) w.at(r, c) = tmp[c];
  }
}

void haar_cols(Matrix& w, std::size_t rows, std::size_t cols) {
  std::vector<double> tmp(rows);
  std::size_t half = rows / 2;
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t i = 0; i < half; ++i) {
      double a = w.at(2 * i, c), b = w.at(2 * i + 1, c);
      tmp[i] = (a + b) * kInvSqrt2;
      tmp[half + i] = (a - b) * kInvSqrt2;
    }
    for (std::size_t r = 0; r < rows; ++r) w.at(r, c) = tmp[r];
  }
}

void haar_rows_inv(Matrix& w, std::size_t rows, std::size_t cols) {
  std::vector<double> tmp(cols);
  std::size_t half = cols / 2;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < half; ++i) {
      double lo = w.at(r, i), hi = w.at(r, half + i);
      tmp[2 * i] = (lo + hi) * kInvSqrt2;
      tmp[2 * i + 1] = (lo - hi) * kInvSqrt2;
    }
    for (std::size_t c = 0; c < cols; ++c) w.at(r, c) = tmp[c];
  }
}

void haar_cols_inv(Matrix& w, std::size_t rows, std::size_t cols) {
  std::vector<double> tmp(rows);
  std::size_t half = rows / 2;
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t i = 0; i < half; ++i) {
      double lo = w.at(i, c), hi = w.at(half + i, c);
      tmp[2 * i] = (lo + hi) * kInvSqrt2;
      tmp[2 * i + 1] = (lo - hi) * kInvSqrt2;
    }
    for (std::size_t r = 0; r < rows; ++r) w.at(r, c) = tmp[r];
  }
}

Matrix copy_region(const Matrix& w, std::size_t r0, std::size_t c0,
                   std::size_t rows, std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = w.at(r0 + r, c0 + c);
  return out;
}

void paste_region(Matrix& w, std::size_t r0, std::size_t c0, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) w.at(r0 + r, c0 + c) = m.at(r, c);
}

}  // namespace

const char* band_name(Band b) {
  switch (b) {
    case Band::LL: return "LL";
    case Band::LH: return "LH";
    case Band::HL: return "HL";
    case Band::HH: return "HH";
  }
  return "?";
}

Band parse_band(const std::string& name) {
  if (name == "LL") return Band::LL;
  if (name == "LH") return Band::LH;
  if (name == "HL") return Band::HL;
  if (name == "HH") return Band::HH;
  fail(Errc::BadSelector, "unknown band " + name);
}

void DwtPyramid::validate() const {
  if (levels == 0 || details.size() != levels)
    fail(Errc::InconsistentPyramid, "level count mismatch");
  if ((source_width >> levels) << levels != source_width ||
      (source_height >> levels) << levels != source_height ||
      source_width >> levels == 0 || source_height >> levels == 0)
    fail(Errc::InconsistentPyramid, "source dimensions not dyadic");
  for (std::size_t i = 0; i < levels; ++i) {
    std::size_t r = source_height >> (i + 1);
    std::size_t c = source_width >> (i + 1);
    const DetailBands& d = details[i];
    if (d.lh.rows != r || d.lh.cols != c || d.hl.rows != r || d.hl.cols != c ||
        d.hh.rows != r || d.hh.cols != c)
      fail(Errc::InconsistentPyramid,
           "detail dimensions wrong at level " + std::to_string(i + 1));
  }
  if (ll.rows != source_height >> levels || ll.cols != source_width >> levels)
    fail(Errc::InconsistentPyramid, "approximation dimensions wrong");
}

DwtPyramid dwt_forward(const GrayImage& img, std::size_t levels) {
  if (levels == 0) fail(Errc::DimensionNotDyadic, "levels must be >= 1");
  if (levels > 30 || (img.width >> levels) << levels != img.width ||
      (img.height >> levels) << levels != img.height ||
      img.width >> levels == 0 || img.height >> levels == 0)
    fail(Errc::DimensionNotDyadic,
         std::to_string(img.width) + "x" + std::to_string(img.height) +
             " not divisible by 2^" + std::to_string(levels));

  Matrix w(img.height, img.width);
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    w.v[i] = static_cast<double>(img.pixels[i]);

  DwtPyramid pyr;
  pyr.levels = levels;
  pyr.source_width = img.width;
  pyr.source_height = img.height;
  std::size_t rows = img.height, cols = img.width;
  for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
    haar_rows(w, rows, cols);
    haar_cols(w, rows, cols);
    std::size_t hr = rows / 2, hc = cols / 2;
    DetailBands d;
    d.hl = copy_region(w, 0, hc, hr, hc);        // horizontal detail
    d.lh = copy_region(w, hr, 0, hr, hc);        // vertical detail
    d.hh = copy_region(w, hr, hc, hr, hc);       // diagonal detail
    pyr.details.push_back(std::move(d));
    rows = hr;
    cols = hc;
  }
  pyr.ll = copy_region(w, 0, 0, rows, cols);
  return pyr;
}

GrayImage dwt_inverse(const DwtPyramid& pyr) {
  pyr.validate();
  Matrix w(pyr.source_height, pyr.source_width);
  paste_region(w, 0, 0, pyr.ll);
  for (std::size_t lvl = pyr.levels; lvl >= 1; --lvl) {
    std::size_t hr = pyr.source_height >> lvl;
    std::size_t hc = pyr.source_width >> lvl;
    const DetailBands& d = pyr.details[lvl - 1];
    paste_region(w, 0, hc, d.hl);
    paste_region(w, hr, 0, d.lh);
    paste_region(w, hr, hc, d.hh);
    haar_cols_inv(w, hr * 2, hc * 2);
    haar_rows_inv(w, hr * 2, hc * 2);
  }
  GrayImage img(pyr.source_width, pyr.source_height);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    long long q = round_pixel(w.v[i]);
    if (q < 0) q = 0;
    if (q > 255) q = 255;
    img.pixels[i] = static_cast<std::uint8_t>(q);
  }
  return img;
}

LscSelector LscSelector::pixel(std::uint32_t bit) {
  LscSelector s;
  s.domain = Domain::Pixel;
  s.bit = bit;
  s.validate();
  return s;
}

LscSelector LscSelector::dwt(Band band, std::size_t level, std::uint32_t bit) {
  LscSelector s;
  s.domain = Domain::Dwt;
  s.band = band;
  s.level = level;
  s.bit = bit;
  s.validate();
  return s;
}

void LscSelector::validate() const {
  if (bit > 3)
    fail(Errc::BadBitIndex,
         "bit " + std::to_string(bit) + " is not least significant content");
  if (domain == Domain::Dwt && level == 0)
    fail(Errc::BadSelector, "level must be >= 1");
}

std::string LscSelector::to_string() const {
  if (domain == Domain::Pixel) return "pixel:bit" + std::to_string(bit);
  return std::string("dwt:") + band_name(band) + std::to_string(level) +
         ":bit" + std::to_string(bit);
}

long long integerize(double c) {
  return static_cast<long long>(std::floor(c + 0.5 + kTieEps));
}

const Matrix& select_band(const DwtPyramid& pyr, Band band, std::size_t level) {
  if (level == 0 || level > pyr.levels)
    fail(Errc::BadSelector, "level " + std::to_string(level) +
                                " outside pyramid of depth " +
                                std::to_string(pyr.levels));
  if (band == Band::LL) {
    if (level != pyr.levels)
      fail(Errc::BadSelector, "approximation stored only at the deepest level");
    return pyr.ll;
  }
  const DetailBands& d = pyr.details[level - 1];
  switch (band) {
    case Band::LH: return d.lh;
    case Band::HL: return d.hl;
    case Band::HH: return d.hh;
    default: break;
  }
  fail(Errc::BadSelector, "unreachable band");
}

Matrix& select_band(DwtPyramid& pyr, Band band, std::size_t level) {
  return const_cast<Matrix&>(
      select_band(static_cast<const DwtPyramid&>(pyr), band, level));
}

SystemState read_lsc(const GrayImage& img, const LscSelector& sel) {
  sel.validate();
  if (sel.domain != LscSelector::Domain::Pixel)
    fail(Errc::BadSelector, "selector does not address pixels");
  SystemState s(img.pixels.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    s.set(i, (img.pixels[i] >> sel.bit) & 1);
  return s;
}

SystemState read_lsc(const DwtPyramid& pyr, const LscSelector& sel) {
  sel.validate();
  if (sel.domain != LscSelector::Domain::Dwt)
    fail(Errc::BadSelector, "selector does not address a subband");
  const Matrix& m = select_band(pyr, sel.band, sel.level);
  SystemState s(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    long long q = integerize(m.v[i]);
    std::uint64_t mag = static_cast<std::uint64_t>(q < 0 ? -q : q);
    s.set(i, static_cast<int>((mag >> sel.bit) & 1));
  }
  return s;
}

namespace {

// The unique magnitude-bit complement that is an involution on the signed
// integerized values: XOR on two's complement pairs 0<->2^b, 1<->3... above
// zero and -1<->-(2^b+1), -2^b<->-2^(b+1)... below, never joining the two
// signs through the shared magnitude-0 class.
long long toggle_bit(long long q, std::uint32_t bit) {
  return q ^ (1ll << bit);
}

}  // namespace

GrayImage write_lsc(const GrayImage& img, const LscSelector& sel,
                    const SystemState& state) {
  sel.validate();
  if (sel.domain != LscSelector::Domain::Pixel)
    fail(Errc::BadSelector, "selector does not address pixels");
  if (state.size() != img.pixels.size())
    fail(Errc::SizeMismatch, "state size differs from pixel count");
  GrayImage out = img;
  std::uint8_t mask = static_cast<std::uint8_t>(1u << sel.bit);
  for (std::size_t i = 0; i < out.pixels.size(); ++i) {
    if (state.cell(i))
      out.pixels[i] |= mask;
    else
      out.pixels[i] &= static_cast<std::uint8_t>(~mask);
  }
  return out;
}

void write_lsc(DwtPyramid& pyr, const LscSelector& sel,
               const SystemState& state) {
  sel.validate();
  if (sel.domain != LscSelector::Domain::Dwt)
    fail(Errc::BadSelector, "selector does not address a subband");
  Matrix& m = select_band(pyr, sel.band, sel.level);
  if (state.size() != m.size())
    fail(Errc::SizeMismatch, "state size differs from band element count");
  for (std::size_t i = 0; i < m.size(); ++i) {
    long long q = integerize(m.v[i]);
    std::uint64_t mag = static_cast<std::uint64_t>(q < 0 ? -q : q);
    int have = static_cast<int>((mag >> sel.bit) & 1);
    int want = state.cell(i);
    if (have == want) continue;
    // Exactly +/-2^bit, carrying the fractional part along; as a translation
    // by (toggled q - q) the write is undone by the complementary write.
    m.v[i] += static_cast<double>(toggle_bit(q, sel.bit) - q);
  }
}

BitString read_msc(const GrayImage& img,
                   const std::vector<std::uint32_t>& msb_set) {
  for (auto b : msb_set)
    if (b < 4 || b > 7)
      fail(Errc::BadBitIndex,
           "bit " + std::to_string(b) + " is not most significant content");
  BitString out;
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    for (auto b : msb_set) out.push_back((img.pixels[i] >> b) & 1);
  return out;
}

}  // namespace chaoswm

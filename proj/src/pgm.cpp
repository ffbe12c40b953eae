#include "chaoswm/pgm.hpp"

#include <cstdio>
#include <fstream>
#include <limits>

#include "chaoswm/errors.hpp"
#include "chaoswm/prng.hpp"

namespace chaoswm {

namespace {

struct TokenReader {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;

  bool is_space(std::uint8_t c) const {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
           c == '\f';
  }

  // Skips whitespace and '#' comments (to end of line).
  void skip_separators() {
    while (pos < bytes.size()) {
      if (is_space(bytes[pos])) {
        ++pos;
      } else if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  std::string token() {
    skip_separators();
    std::string t;
    while (pos < bytes.size() && !is_space(bytes[pos]) && bytes[pos] != '#')
      t.push_back(static_cast<char>(bytes[pos++]));
    if (t.empty()) fail(Errc::MalformedHeader, "unexpected end of header");
    return t;
  }

  std::uint32_t number() {
    std::string t = token();
    std::uint64_t v = 0;
    for (char c : t) {
      if (c < '0' || c > '9')
        fail(Errc::MalformedHeader, "non-numeric header field: " + t);
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > 0xFFFFFFFFull) fail(Errc::MalformedHeader, "header field overflow");
    }
    return static_cast<std::uint32_t>(v);
  }
};

}  // namespace

GrayImage decode_pgm(std::span<const std::uint8_t> bytes) {
  TokenReader r{bytes};
  if (r.token() != "P5") fail(Errc::MalformedHeader, "not a binary PGM (P5)");
  std::uint32_t w = r.number();
  std::uint32_t h = r.number();
  std::uint32_t maxval = r.number();
  if (w == 0 || h == 0) fail(Errc::MalformedHeader, "zero dimension");
  if (maxval != 255)
    fail(Errc::UnsupportedMaxval, "maxval " + std::to_string(maxval));
  // Exactly one whitespace byte separates the header from the raster.
  if (r.pos >= bytes.size() || !r.is_space(bytes[r.pos]))
    fail(Errc::MalformedHeader, "missing raster separator");
  ++r.pos;
  std::size_t need = static_cast<std::size_t>(w) * h;
  if (bytes.size() - r.pos < need)
    fail(Errc::TruncatedRaster,
         "raster holds " + std::to_string(bytes.size() - r.pos) + " of " +
             std::to_string(need) + " bytes");
  GrayImage img(w, h);
  std::copy(bytes.begin() + static_cast<std::ptrdiff_t>(r.pos),
            bytes.begin() + static_cast<std::ptrdiff_t>(r.pos + need),
            img.pixels.begin());
  return img;
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
  if (img.width == 0 || img.height == 0 ||
      img.pixels.size() != static_cast<std::size_t>(img.width) * img.height)
    fail(Errc::DimensionMismatch, "image buffer does not match dimensions");
  char header[64];
  int n = std::snprintf(header, sizeof header, "P5\n%u %u\n255\n", img.width,
                        img.height);
  std::vector<std::uint8_t> out(header, header + n);
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

GrayImage load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::MalformedHeader, "cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return decode_pgm(bytes);
}

void save_pgm(const std::string& path, const GrayImage& img) {
  std::vector<std::uint8_t> bytes = encode_pgm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::MalformedHeader, "cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(Errc::TruncatedRaster, "short write to " + path);
}

namespace {

// Lattice hash in [0,255].
std::uint32_t lattice(std::uint64_t seed, std::uint32_t tag, std::uint64_t gx,
                      std::uint64_t gy) {
  std::uint64_t h = splitmix64(seed ^ (0x9E37u + tag));
  h = splitmix64(h ^ (gx << 32) ^ gy);
  return static_cast<std::uint32_t>(h & 0xFF);
}

// Bilinear value noise at integer pixel coordinates, spacing a power of two.
std::int64_t value_noise(std::uint64_t seed, std::uint32_t tag,
                         std::uint32_t x, std::uint32_t y,
                         std::uint32_t spacing) {
  std::uint32_t gx = x / spacing, gy = y / spacing;
  std::uint32_t fx = x % spacing, fy = y % spacing;
  std::int64_t a = lattice(seed, tag, gx, gy);
  std::int64_t b = lattice(seed, tag, gx + 1, gy);
  std::int64_t c = lattice(seed, tag, gx, gy + 1);
  std::int64_t d = lattice(seed, tag, gx + 1, gy + 1);
  std::int64_t s = spacing;
  std::int64_t top = a * (s - fx) + b * fx;
  std::int64_t bot = c * (s - fx) + d * fx;
  return (top * (s - fy) + bot * fy) / (s * s);
}

}  // namespace

GrayImage synth_test_image(std::uint32_t width, std::uint32_t height,
                           std::uint64_t seed) {
  if (width == 0 || height == 0)
    fail(Errc::DimensionMismatch, "zero dimension");
  GrayImage img(width, height);
  std::vector<std::int64_t> field(img.size());
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x) {
      std::int64_t v = 0;
      v += 100 * value_noise(seed, 1, x, y, 64);
      v += 55 * value_noise(seed, 2, x, y, 16);
      v += 25 * value_noise(seed, 3, x, y, 4);
      v += 7 * static_cast<std::int64_t>(lattice(seed, 4, x, y));
      // Gentle diagonal gradient so the image is not stationary.
      v += 80 * static_cast<std::int64_t>(x) * 255 / width;
      v += 60 * static_cast<std::int64_t>(y) * 255 / height;
      field[static_cast<std::size_t>(y) * width + x] = v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  for (std::size_t i = 0; i < field.size(); ++i) {
    std::int64_t v;
    if (hi == lo)
      v = field[i] & 0xFF;
    else
      v = ((field[i] - lo) * 255 + (hi - lo) / 2) / (hi - lo);
    img.pixels[i] = static_cast<std::uint8_t>(v);
  }
  return img;
}

}  // namespace chaoswm

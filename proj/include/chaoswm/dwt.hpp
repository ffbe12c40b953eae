#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaoswm/bits.hpp"
#include "chaoswm/chaos.hpp"
#include "chaoswm/image.hpp"

namespace chaoswm {

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> v;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, 0.0) {}
  double at(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
  double& at(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  std::size_t size() const { return v.size(); }
};

enum class Band { LL, LH, HL, HH };

const char* band_name(Band b);
Band parse_band(const std::string& name);

// Detail bands of one decomposition level. lh: vertical detail (row lowpass,
// column highpass), hl: horizontal detail, hh: diagonal detail.
struct DetailBands {
  Matrix lh, hl, hh;
};

// Orthonormal 2-D Haar pyramid. details[0] is the finest level (level 1);
// ll is the approximation at level `levels`.
struct DwtPyramid {
  std::size_t levels = 0;
  std::uint32_t source_width = 0;
  std::uint32_t source_height = 0;
  Matrix ll;
  std::vector<DetailBands> details;

  void validate() const;  // throws InconsistentPyramid
};

// Pairs (a,b) -> ((a+b)/sqrt2, (a-b)/sqrt2), rows then columns, recursing on
// the approximation. Dimensions must be divisible by 2^levels
// (DimensionNotDyadic otherwise); levels >= 1.
DwtPyramid dwt_forward(const GrayImage& img, std::size_t levels);

// Exact synthesis followed by pixel rounding (half-up with a tiny positive
// tie bias, so exact .5 ties produced by dyadic coefficient edits never flip
// on float noise) and clamping to [0,255].
GrayImage dwt_inverse(const DwtPyramid& pyr);

// Addresses the carrier of least significant content: a low-order bit of
// pixels, or of the integerized magnitudes of one subband.
struct LscSelector {
  enum class Domain { Pixel, Dwt };
  Domain domain = Domain::Pixel;
  Band band = Band::HH;       // Dwt only
  std::size_t level = 1;      // Dwt only, >= 1
  std::uint32_t bit = 0;      // low-order bit index, <= 3

  static LscSelector pixel(std::uint32_t bit);
  static LscSelector dwt(Band band, std::size_t level, std::uint32_t bit);
  void validate() const;  // throws BadSelector / BadBitIndex
  std::string to_string() const;
};

// floor(c + 0.5 + 1e-9): half-up rounding on the signed value, with a tiny
// positive bias so the exact half-integer ties that dyadic coefficients of
// integer images produce never flip on float noise. Half-up (rather than
// ties-away-from-zero) keeps the rule translation-invariant across zero,
// which makes bit writes exactly undoable.
long long integerize(double c);

const Matrix& select_band(const DwtPyramid& pyr, Band band, std::size_t level);
Matrix& select_band(DwtPyramid& pyr, Band band, std::size_t level);

// State read from the selected bit of each element (raster order).
SystemState read_lsc(const GrayImage& img, const LscSelector& sel);
SystemState read_lsc(const DwtPyramid& pyr, const LscSelector& sel);

// Writes the state back. Pixel domain sets the bit in place; DWT domain
// adjusts each coefficient by exactly +/-2^bit, chosen as the involution
// q -> q XOR 2^bit on the two's-complement integerized value, leaving the
// fractional part untouched (no re-quantization). An involution is required
// so that detection's second application restores the original coefficient
// values exactly; it complements the selected magnitude bit for every q.
GrayImage write_lsc(const GrayImage& img, const LscSelector& sel,
                    const SystemState& state);
void write_lsc(DwtPyramid& pyr, const LscSelector& sel,
               const SystemState& state);

// Most significant content: the listed pixel bits (each in [4,7]) of every
// pixel, raster order, bits taken in the given order per pixel.
BitString read_msc(const GrayImage& img,
                   const std::vector<std::uint32_t>& msb_set);

}  // namespace chaoswm

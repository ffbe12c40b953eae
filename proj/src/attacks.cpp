#include "chaoswm/attacks.hpp"

#include <cmath>

#include "chaoswm/errors.hpp"
#include "chaoswm/prng.hpp"

namespace chaoswm {

GrayImage attack_zero_square(const GrayImage& img, std::uint32_t row,
                             std::uint32_t col, std::uint32_t size) {
  if (static_cast<std::uint64_t>(row) + size > img.height ||
      static_cast<std::uint64_t>(col) + size > img.width)
    fail(Errc::OutOfBounds, "square leaves the image");
  GrayImage out = img;
  for (std::uint32_t r = row; r < row + size; ++r)
    for (std::uint32_t c = col; c < col + size; ++c) out.at(r, c) = 0;
  return out;
}

GrayImage attack_gaussian(const GrayImage& img, double sigma,
                          std::uint64_t seed) {
  if (sigma < 0.0) fail(Errc::OutOfBounds, "sigma must be >= 0");
  GrayImage out = img;
  if (sigma == 0.0) return out;
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  for (std::size_t i = 0; i < out.pixels.size(); ++i) {
    // Box-Muller over a counter-based generator: two fresh uniforms per pixel.
    std::uint64_t h1 = splitmix64(seed ^ (2 * i + 1));
    std::uint64_t h2 = splitmix64(seed ^ (2 * i + 2));
    double u1 = (static_cast<double>(h1 >> 11) + 1.0) * 0x1p-53;  // (0,1]
    double u2 = static_cast<double>(h2 >> 11) * 0x1p-53;          // [0,1)
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    double v = static_cast<double>(out.pixels[i]) + sigma * z;
    long long q = std::llround(v);
    if (q < 0) q = 0;
    if (q > 255) q = 255;
    out.pixels[i] = static_cast<std::uint8_t>(q);
  }
  return out;
}

GrayImage attack_crop_pad(const GrayImage& img, std::uint32_t row,
                          std::uint32_t col, std::uint32_t w, std::uint32_t h) {
  if (static_cast<std::uint64_t>(row) + h > img.height ||
      static_cast<std::uint64_t>(col) + w > img.width)
    fail(Errc::OutOfBounds, "rectangle leaves the image");
  GrayImage out(img.width, img.height, 0);
  for (std::uint32_t r = row; r < row + h; ++r)
    for (std::uint32_t c = col; c < col + w; ++c) out.at(r, c) = img.at(r, c);
  return out;
}

}  // namespace chaoswm

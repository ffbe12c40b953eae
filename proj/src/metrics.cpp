#include "chaoswm/metrics.hpp"

#include <cmath>
#include <limits>

#include "chaoswm/errors.hpp"

namespace chaoswm {

namespace {

double mse_images(const GrayImage& a, const GrayImage& b) {
  if (a.width != b.width || a.height != b.height)
    fail(Errc::DimensionMismatch, "image dimensions differ");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
    acc += d * d;
  }
  return acc / static_cast<double>(a.pixels.size());
}

}  // namespace

double rms(const GrayImage& a, const GrayImage& b) {
  return std::sqrt(mse_images(a, b));
}

double rms(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    fail(Errc::DimensionMismatch, "matrix dimensions differ");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    double d = a.v[i] - b.v[i];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(a.v.size()));
}

double psnr(const GrayImage& a, const GrayImage& b) {
  double mse = mse_images(a, b);
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace chaoswm

#pragma once

#include "chaoswm/dwt.hpp"
#include "chaoswm/image.hpp"

namespace chaoswm {

// Root mean square difference; dimensions must match.
double rms(const GrayImage& a, const GrayImage& b);
double rms(const Matrix& a, const Matrix& b);

// 10*log10(255^2 / MSE); +infinity for identical images.
double psnr(const GrayImage& a, const GrayImage& b);

}  // namespace chaoswm

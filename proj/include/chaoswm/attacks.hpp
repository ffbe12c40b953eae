#pragma once

#include <cstdint>

#include "chaoswm/image.hpp"

namespace chaoswm {

// Zeroes the size x size square with top-left corner (row, col). The square
// must lie inside the image (OutOfBounds otherwise).
GrayImage attack_zero_square(const GrayImage& img, std::uint32_t row,
                             std::uint32_t col, std::uint32_t size);

// Adds seeded Gaussian noise (Box-Muller over a splitmix64 counter) with the
// given standard deviation; results are rounded and clamped to [0,255].
GrayImage attack_gaussian(const GrayImage& img, double sigma,
                          std::uint64_t seed);

// Keeps the rectangle (row, col, w, h) and zeroes everything outside it;
// image dimensions are preserved. The rectangle must fit (OutOfBounds).
GrayImage attack_crop_pad(const GrayImage& img, std::uint32_t row,
                          std::uint32_t col, std::uint32_t w, std::uint32_t h);

}  // namespace chaoswm

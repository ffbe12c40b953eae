#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chaoswm/image.hpp"

namespace chaoswm {

// Binary PGM (P5), maxval 255 only. Reader accepts '#' comments and any
// whitespace between header tokens; writer emits the canonical header
// "P5\n<w> <h>\n255\n".
GrayImage decode_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_pgm(const GrayImage& img);

GrayImage load_pgm(const std::string& path);
void save_pgm(const std::string& path, const GrayImage& img);

// Deterministic grayscale test image with natural statistics: several
// octaves of smoothed value noise plus a diagonal gradient, linearly
// stretched so the darkest pixel is 0 and the brightest 255. Integer
// arithmetic only, so output is platform-independent bit for bit.
GrayImage synth_test_image(std::uint32_t width, std::uint32_t height,
                           std::uint64_t seed);

}  // namespace chaoswm

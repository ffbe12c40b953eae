#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace chaoswm {

// Convolutional interleaver over 3 branches; branch b delays its symbols by
// b*delay_step branch cycles (3*b*delay_step stream positions).
struct InterleaverConfig {
  std::uint32_t delay_step = 4;
};

// Output is input.size() + 6*delay_step symbols (flush included); positions
// not covered by an input symbol are zero. Empty input stays empty.
std::vector<std::uint8_t> interleave3(const InterleaverConfig& cfg,
                                      std::span<const std::uint8_t> data);

// Exact inverse: deinterleave3(cfg, interleave3(cfg, x)) == x.
std::vector<std::uint8_t> deinterleave3(const InterleaverConfig& cfg,
                                        std::span<const std::uint8_t> data);

}  // namespace chaoswm

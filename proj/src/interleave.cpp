#include "chaoswm/interleave.hpp"

#include "chaoswm/errors.hpp"

namespace chaoswm {

// Input symbol i rides branch i mod 3 and is delayed by 3*d*(i mod 3) stream
// positions, so output index = i + 3*d*(i mod 3). Output indices keep the
// residue of their input index mod 3, which makes the map injective; the
// uncovered head/tail positions are the flush and stay zero.

std::vector<std::uint8_t> interleave3(const InterleaverConfig& cfg,
                                      std::span<const std::uint8_t> data) {
  if (data.empty()) return {};
  std::size_t d = cfg.delay_step;
  std::vector<std::uint8_t> out(data.size() + 6 * d, 0);
  for (std::size_t i = 0; i < data.size(); ++i)
    out[i + 3 * d * (i % 3)] = data[i];
  return out;
}

std::vector<std::uint8_t> deinterleave3(const InterleaverConfig& cfg,
                                        std::span<const std::uint8_t> data) {
  if (data.empty()) return {};
  std::size_t d = cfg.delay_step;
  if (data.size() < 6 * d)
    fail(Errc::MalformedFrame, "interleaved stream shorter than its flush");
  std::vector<std::uint8_t> out(data.size() - 6 * d);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = data[i + 3 * d * (i % 3)];
  return out;
}

}  // namespace chaoswm

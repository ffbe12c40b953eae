#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chaoswm/interleave.hpp"
#include "chaoswm/rs.hpp"

namespace chaoswm {

// Cross-interleaved Reed-Solomon pipeline:
//   encode: [2-byte length prefix ++ payload, zero-padded to x24]
//           -> RS(32,24) per block -> interleave3 -> zero-pad to x16
//           -> RS(24,16) per block
//   decode: exact reverse. Inner-block decode failures pass the received
//   data bytes through for the outer layer to absorb; an outer-block failure
//   is terminal.
struct CircConfig {
  RsCode outer = RsCode::rs32_24();
  RsCode inner = RsCode::rs24_16();
  InterleaverConfig interleaver{};  // delay_step 4
};

struct CircDecodeStats {
  std::uint32_t inner_failures = 0;
  std::uint32_t inner_corrections = 0;
  std::uint32_t outer_corrections = 0;
};

// payload.size() <= 65535 (PayloadTooLarge beyond).
std::vector<std::uint8_t> circ_encode(const CircConfig& cfg,
                                      std::span<const std::uint8_t> payload);

std::vector<std::uint8_t> circ_decode(const CircConfig& cfg,
                                      std::span<const std::uint8_t> stream,
                                      CircDecodeStats* stats = nullptr);

// Encoded size for a payload of the given length, without encoding.
std::size_t circ_encoded_size(const CircConfig& cfg, std::size_t payload_size);

}  // namespace chaoswm

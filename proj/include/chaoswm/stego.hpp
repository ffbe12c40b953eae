#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaoswm/bits.hpp"
#include "chaoswm/chaos.hpp"
#include "chaoswm/circ.hpp"
#include "chaoswm/image.hpp"
#include "chaoswm/keystream.hpp"

namespace chaoswm {

// Chaotic iteration count of the mixing stage (2000 steps; with ten-by-ten
// grouping that is 20000 logistic bits).
inline constexpr std::size_t kMixSteps = 2000;
// Fixed domain of the placement strategy, so plans depend only on the key,
// the image dimensions and the requested bit count.
inline constexpr std::uint32_t kPlanStrategyDomain = 1024;
// The coded-stream bit count is embedded first as 15 replicated copies of a
// 32-bit big-endian header, majority-voted by the blind extractor.
inline constexpr std::size_t kLengthHeaderBits = 32;
inline constexpr std::size_t kLengthHeaderCopies = 15;
inline constexpr std::size_t kPlanHeaderBits =
    kLengthHeaderBits * kLengthHeaderCopies;

struct Placement {
  std::uint16_t row;
  std::uint16_t col;
  std::uint8_t plane;  // 1 or 2 (first or second least significant pixel bit)

  bool operator==(const Placement&) const = default;
};

struct SpatialEmbedPlan {
  std::vector<Placement> placements;
  std::size_t message_bits = 0;
};

// Self-inverse whitening: chaotic iterations with vectorial negation over the
// bit vector, `steps` terms of s. Strategy domain must equal bits.size().
BitString mix(const BitString& bits, const Strategy& s, std::size_t steps);

// Draws triplets from the keyed placement stream, skipping out-of-range and
// already-used slots, until nbits distinct placements exist. Gives up
// (PlanExhausted) after 64 * nbits draws or when nbits exceeds capacity.
// Plans are prefix-stable: the first n placements do not depend on nbits.
SpatialEmbedPlan build_plan(const ChaosKey& key, std::uint32_t width,
                            std::uint32_t height, std::size_t nbits);

// 2 * min(width,255) * min(height,255): triplet coordinates are mod-255.
std::size_t spatial_capacity(std::uint32_t width, std::uint32_t height);

// text -> bits -> frame -> mix -> CIRC -> planned bit-plane substitution.
// With authenticate, the key is folded with a digest of pixel bits [4,7]
// (which embedding never alters), read from the cover.
GrayImage embed(const GrayImage& cover, const std::string& text,
                const ChaosKey& key, bool authenticate = false);

// Blind inverse: needs only the stego image and the key.
std::string extract(const GrayImage& stego, const ChaosKey& key,
                    bool authenticate = false);

}  // namespace chaoswm

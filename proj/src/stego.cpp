#include "chaoswm/stego.hpp"

#include <algorithm>

#include "chaoswm/circ.hpp"
#include "chaoswm/dwt.hpp"
#include "chaoswm/errors.hpp"
#include "chaoswm/payload.hpp"

namespace chaoswm {

namespace {

constexpr std::uint32_t kEncodedBitsPerGroup = 192;  // smallest stream growth

BitString pad_to_bytes(const BitString& bits) {
  BitString out = bits;
  while (out.size() % 8 != 0) out.push_back(0);
  return out;
}

ChaosKey effective_key(const ChaosKey& key, const GrayImage& img,
                       bool authenticate) {
  if (!authenticate) return key;
  // The carrier bits live strictly below bit 4, so the four top planes are
  // identical before and after embedding and both sides can hash them.
  return authenticated_key(key, read_msc(img, {7, 6, 5, 4}));
}

std::uint32_t header_word(const BitString& header_bits, std::size_t copy) {
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < kLengthHeaderBits; ++i)
    w = (w << 1) | header_bits.bit(copy * kLengthHeaderBits + i);
  return w;
}

}  // namespace

BitString mix(const BitString& bits, const Strategy& s, std::size_t steps) {
  if (bits.empty()) return bits;  // nothing to permute; treat as a no-op
  SystemState state(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) state.set(i, bits.bit(i));
  SystemState mixed = iterate_negation(state, s, steps);
  BitString out = BitString::zeros(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out.set(i, mixed.cell(i));
  return out;
}

std::size_t spatial_capacity(std::uint32_t width, std::uint32_t height) {
  return 2 * std::min<std::size_t>(width, 255) *
         std::min<std::size_t>(height, 255);
}

SpatialEmbedPlan build_plan(const ChaosKey& key, std::uint32_t width,
                            std::uint32_t height, std::size_t nbits) {
  if (width == 0 || height == 0)
    fail(Errc::DimensionMismatch, "empty cover image");
  if (nbits > spatial_capacity(width, height))
    fail(Errc::CapacityExceeded,
         std::to_string(nbits) + " bits into capacity " +
             std::to_string(spatial_capacity(width, height)));
  SpatialEmbedPlan plan;
  plan.message_bits = nbits;
  if (nbits == 0) return plan;
  plan.placements.reserve(nbits);

  // A fixed strategy domain keeps the draw sequence independent of the
  // requested length, so a short plan is a prefix of any longer one.
  Strategy s = keyed_strategy(key, kPlanStrategyDomain);
  TripletStream triplets(s, key);

  std::vector<std::uint8_t> used(255 * 255 * 2, 0);
  const std::size_t max_draws = 64 * nbits;
  std::size_t draws = 0;
  while (plan.placements.size() < nbits) {
    if (draws >= max_draws)
      fail(Errc::PlanExhausted,
           "no free site after " + std::to_string(draws) + " draws");
    Triplet t = triplets.next();
    ++draws;
    if (t.x >= height || t.y >= width) continue;  // outside this cover
    std::size_t slot =
        (static_cast<std::size_t>(t.x) * 255 + t.y) * 2 + (t.z - 1);
    if (used[slot]) continue;
    used[slot] = 1;
    plan.placements.push_back(Placement{static_cast<std::uint16_t>(t.x),
                                        static_cast<std::uint16_t>(t.y),
                                        static_cast<std::uint8_t>(t.z)});
  }
  return plan;
}

GrayImage embed(const GrayImage& cover, const std::string& text,
                const ChaosKey& key, bool authenticate) {
  ChaosKey k = effective_key(key, cover, authenticate);

  BitString frame = pad_to_bytes(frame_payload(text_to_bits(text)));
  Strategy mix_s = keyed_strategy(k, static_cast<std::uint32_t>(frame.size()));
  BitString mixed = mix(frame, mix_s, kMixSteps);

  std::vector<std::uint8_t> coded = circ_encode(CircConfig{}, mixed.to_bytes());
  std::size_t coded_bits = coded.size() * 8;
  std::size_t total = kPlanHeaderBits + coded_bits;
  if (total > spatial_capacity(cover.width, cover.height))
    fail(Errc::CapacityExceeded,
         std::to_string(total) + " bits into capacity " +
             std::to_string(spatial_capacity(cover.width, cover.height)));

  BitString bits = BitString::zeros(total);
  std::uint32_t count = static_cast<std::uint32_t>(coded_bits);
  for (std::size_t copy = 0; copy < kLengthHeaderCopies; ++copy)
    for (std::size_t i = 0; i < kLengthHeaderBits; ++i)
      bits.set(copy * kLengthHeaderBits + i,
               (count >> (kLengthHeaderBits - 1 - i)) & 1);
  BitString coded_bitstring =
      BitString::from_bytes(coded, coded_bits);
  for (std::size_t i = 0; i < coded_bits; ++i)
    bits.set(kPlanHeaderBits + i, coded_bitstring.bit(i));

  SpatialEmbedPlan plan = build_plan(k, cover.width, cover.height, total);
  GrayImage out = cover;
  for (std::size_t i = 0; i < plan.placements.size(); ++i) {
    const Placement& p = plan.placements[i];
    std::uint8_t mask = static_cast<std::uint8_t>(1u << (p.plane - 1));
    std::uint8_t& px = out.at(p.row, p.col);
    if (bits.bit(i))
      px |= mask;
    else
      px &= static_cast<std::uint8_t>(~mask);
  }
  return out;
}

std::string extract(const GrayImage& stego, const ChaosKey& key,
                    bool authenticate) {
  ChaosKey k = effective_key(key, stego, authenticate);
  std::size_t capacity = spatial_capacity(stego.width, stego.height);
  if (kPlanHeaderBits > capacity)
    fail(Errc::MalformedFrame, "cover too small to hold a header");

  SpatialEmbedPlan header_plan =
      build_plan(k, stego.width, stego.height, kPlanHeaderBits);
  BitString header_bits = BitString::zeros(kPlanHeaderBits);
  for (std::size_t i = 0; i < header_plan.placements.size(); ++i) {
    const Placement& p = header_plan.placements[i];
    header_bits.set(i, (stego.at(p.row, p.col) >> (p.plane - 1)) & 1);
  }

  // Majority vote across the replicated copies of the length word.
  std::uint32_t count = 0;
  for (std::size_t i = 0; i < kLengthHeaderBits; ++i) {
    std::size_t ones = 0;
    for (std::size_t copy = 0; copy < kLengthHeaderCopies; ++copy)
      ones += header_word(header_bits, copy) >> (kLengthHeaderBits - 1 - i) & 1;
    count = (count << 1) | (ones * 2 > kLengthHeaderCopies ? 1u : 0u);
  }
  if (count == 0 || count % kEncodedBitsPerGroup != 0 ||
      kPlanHeaderBits + count > capacity)
    fail(Errc::MalformedFrame,
         "implausible payload length " + std::to_string(count));

  SpatialEmbedPlan plan =
      build_plan(k, stego.width, stego.height, kPlanHeaderBits + count);
  BitString coded_bits = BitString::zeros(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Placement& p = plan.placements[kPlanHeaderBits + i];
    coded_bits.set(i, (stego.at(p.row, p.col) >> (p.plane - 1)) & 1);
  }

  std::vector<std::uint8_t> payload =
      circ_decode(CircConfig{}, coded_bits.to_bytes());
  BitString mixed = BitString::from_bytes(payload, payload.size() * 8);
  Strategy mix_s = keyed_strategy(k, static_cast<std::uint32_t>(mixed.size()));
  BitString frame = mix(mixed, mix_s, kMixSteps);
  return bits_to_text(unframe_payload(frame));
}

}  // namespace chaoswm

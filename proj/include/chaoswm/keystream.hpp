#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaoswm/bits.hpp"
#include "chaoswm/chaos.hpp"

namespace chaoswm {

// Secret material driving every keyed stream. Serializes to a line-based text
// file; real-valued fields are written both as decimal and as the raw IEEE-754
// bit pattern, and the bit pattern is authoritative on read so round trips are
// exact.
struct ChaosKey {
  double mu = 3.999999;  // logistic parameter; (0,4], chaotic near 4
  double x0 = 0.65;      // logistic seed in (0,1)
  std::uint32_t discard = 0;  // warm-up iterations to drop
  std::optional<std::uint32_t> u0;  // switch-strategy seed; defaults to S^0
  std::uint32_t triplet_x0 = 11;
  std::uint32_t triplet_y0 = 23;
  std::uint32_t triplet_z0 = 1;  // in {1,2}
  std::optional<std::uint64_t> auth_msc_digest;

  void validate() const;  // throws BadKeyFile on out-of-range fields
  std::uint64_t fingerprint() const;
  std::string serialize() const;
  static ChaosKey deserialize(const std::string& text);
};

// Logistic map iterator: x <- mu*x*(1-x), one bit per iteration (x >= 0.5).
class LogisticBitStream {
 public:
  explicit LogisticBitStream(const ChaosKey& key);
  int next();

 private:
  double mu_;
  double x_;
};

// First n bits of the keyed logistic stream (after `discard` warm-ups).
BitString logistic_bits(const ChaosKey& key, std::size_t n);

// ceil(log2(domain)); 1 when domain == 1.
std::uint32_t strategy_group_bits(std::uint32_t domain);

// Groups bits MSB-first, g = strategy_group_bits(domain) per term, reduced
// mod domain. Length must be a multiple of g.
Strategy bits_to_strategy(const BitString& bits, std::uint32_t domain);

// Unbounded keyed strategy: logistic bits grouped g at a time, mod domain.
// g is 10 for domains <= 1024 (ten-by-ten grouping), ceil(log2 N) beyond.
Strategy keyed_strategy(const ChaosKey& key, std::uint32_t domain);

struct Triplet {
  std::uint32_t x;  // row, in [0,255)
  std::uint32_t y;  // column, in [0,255)
  std::uint32_t z;  // bit plane, in {1,2}
};

// Placement stream. Triplet 0 is the seed triplet reported as-is; each later
// triplet consumes three strategy terms:
//   x_{n+1} = (2 x_n + S^{3n}   + n) mod 255
//   y_{n+1} = (2 y_n + S^{3n+1} + n) mod 255
//   z_{n+1} = ((2 z_n + S^{3n+2} + n) mod 2) + 1
class TripletStream {
 public:
  TripletStream(Strategy s, const ChaosKey& key);
  Triplet next();

 private:
  Strategy s_;
  std::uint64_t n_ = 0;  // triplets emitted so far
  std::uint32_t x_, y_, z_;
};

// First n triplets, materialized.
std::vector<Triplet> triplet_stream(const Strategy& s, const ChaosKey& key,
                                    std::size_t n);

// Recurrent strategy U over [0, M): U^0 = u0 (or S^0 when unset),
// U^{n+1} = (S^{n+1} + 2 U^n + n) mod M. Returns n terms.
Strategy u_strategy(const Strategy& s, std::optional<std::uint32_t> u0,
                    std::uint32_t m, std::size_t n);

// FNV-1a 64 over the bit values (one octet per bit). Empty input hashes to
// the offset basis.
std::uint64_t fnv1a64_bits(const BitString& bits);

// Folds a digest of the most significant content into the key:
// x0' = frac(x0 + digest/2^64), clamped into (0,1).
ChaosKey authenticated_key(const ChaosKey& key, const BitString& msc_bits);

}  // namespace chaoswm

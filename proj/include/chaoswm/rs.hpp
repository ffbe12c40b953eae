#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace chaoswm {

// Systematic Reed-Solomon code over GF(256), shortened from length 255.
// Generator polynomial g(x) = prod_{i=0}^{n-k-1} (x - alpha^{root_offset+i}).
struct RsCode {
  std::uint32_t n;  // codeword symbols
  std::uint32_t k;  // data symbols
  std::uint32_t root_offset = 1;

  std::uint32_t parity() const { return n - k; }
  std::uint32_t t() const { return (n - k) / 2; }
  void validate() const;

  static RsCode rs32_24() { return {32, 24, 1}; }
  static RsCode rs24_16() { return {24, 16, 1}; }
};

struct RsDecodeResult {
  std::vector<std::uint8_t> data;
  std::uint32_t corrected = 0;
};

// data.size() == k; returns data ++ parity (n bytes).
std::vector<std::uint8_t> rs_encode(const RsCode& code,
                                    std::span<const std::uint8_t> data);

// received.size() == n. Corrects up to t symbol errors; decoding runs
// syndromes -> Berlekamp-Massey -> Chien -> Forney and then re-checks all
// syndromes on the corrected word, throwing UncorrectableBlock when the
// pattern is beyond capability or the recheck fails.
RsDecodeResult rs_decode(const RsCode& code,
                         std::span<const std::uint8_t> received);

}  // namespace chaoswm

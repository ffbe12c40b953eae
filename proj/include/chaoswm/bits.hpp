#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chaoswm {

// Ordered bit sequence. Packing and header fields are MSB-first throughout.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  static BitString zeros(std::size_t n);
  // Unpacks nbits from the byte sequence, MSB of bytes[0] first.
  static BitString from_bytes(const std::vector<std::uint8_t>& bytes,
                              std::size_t nbits);
  // Parses a string of '0'/'1' characters.
  static BitString parse(std::string_view s);

  // Packs MSB-first; the final byte is zero-padded on the right.
  std::vector<std::uint8_t> to_bytes() const;
  std::string to_string() const;

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int bit(std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, int v) { bits_[i] = static_cast<std::uint8_t>(v & 1); }
  void flip(std::size_t i) { bits_[i] ^= 1; }
  void push_back(int v) { bits_.push_back(static_cast<std::uint8_t>(v & 1)); }
  void append(const BitString& other);
  BitString slice(std::size_t pos, std::size_t len) const;

  bool operator==(const BitString&) const = default;

 private:
  std::vector<std::uint8_t> bits_;  // one 0/1 value per element
};

}  // namespace chaoswm

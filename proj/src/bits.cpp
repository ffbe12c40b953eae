#include "chaoswm/bits.hpp"

#include "chaoswm/errors.hpp"

namespace chaoswm {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) fail(Errc::DimensionMismatch, "bit values must be 0 or 1");
  }
}

BitString BitString::zeros(std::size_t n) {
  BitString out;
  out.bits_.assign(n, 0);
  return out;
}

BitString BitString::from_bytes(const std::vector<std::uint8_t>& bytes,
                                std::size_t nbits) {
  if (nbits > bytes.size() * 8)
    fail(Errc::DimensionMismatch, "bit count exceeds byte data");
  BitString out;
  out.bits_.reserve(nbits);
  for (std::size_t i = 0; i < nbits; ++i)
    out.bits_.push_back((bytes[i / 8] >> (7 - i % 8)) & 1);
  return out;
}

BitString BitString::parse(std::string_view s) {
  BitString out;
  out.bits_.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      fail(Errc::DimensionMismatch, "bit strings contain only 0 and 1");
    out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    out[i / 8] |= static_cast<std::uint8_t>(bits_[i] << (7 - i % 8));
  return out;
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > bits_.size()) fail(Errc::OutOfBounds, "slice out of range");
  BitString out;
  out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                   bits_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

}  // namespace chaoswm

#include "chaoswm/payload.hpp"

#include <cstdint>

#include "chaoswm/errors.hpp"

namespace chaoswm {

BitString text_to_bits(const std::string& text) {
  BitString out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c > 0x7F)
      fail(Errc::NonAsciiCharacter,
           "byte 0x" + std::to_string(c) + " at position " + std::to_string(i));
    for (int b = 6; b >= 0; --b) out.push_back((c >> b) & 1);
  }
  return out;
}

std::string bits_to_text(const BitString& bits) {
  if (bits.size() % 7 != 0)
    fail(Errc::LengthNotMultipleOf7,
         std::to_string(bits.size()) + " bits");
  std::string out;
  out.reserve(bits.size() / 7);
  for (std::size_t i = 0; i < bits.size(); i += 7) {
    int c = 0;
    for (std::size_t b = 0; b < 7; ++b) c = (c << 1) | bits.bit(i + b);
    out.push_back(static_cast<char>(c));
  }
  return out;
}

BitString frame_payload(const BitString& bits) {
  if (bits.size() > 0xFFFFFFFFull)
    fail(Errc::PayloadTooLarge, "payload exceeds 32-bit bit count");
  auto n = static_cast<std::uint32_t>(bits.size());
  BitString out;
  for (int b = 31; b >= 0; --b) out.push_back((n >> b) & 1);
  out.append(bits);
  return out;
}

BitString unframe_payload(const BitString& framed) {
  if (framed.size() < 32)
    fail(Errc::MalformedFrame, "shorter than the 32-bit length header");
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < 32; ++i)
    n = (n << 1) | static_cast<std::uint64_t>(framed.bit(i));
  if (32 + n > framed.size())
    fail(Errc::MalformedFrame, "declared length exceeds frame");
  // Anything past header+payload is byte-alignment padding: < 8 bits, all 0.
  std::size_t tail = framed.size() - 32 - static_cast<std::size_t>(n);
  if (tail >= 8)
    fail(Errc::MalformedFrame, "frame longer than header+payload+padding");
  for (std::size_t i = framed.size() - tail; i < framed.size(); ++i)
    if (framed.bit(i) != 0) fail(Errc::MalformedFrame, "nonzero padding bit");
  return framed.slice(32, static_cast<std::size_t>(n));
}

}  // namespace chaoswm

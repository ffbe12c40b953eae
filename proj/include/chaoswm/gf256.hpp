#pragma once

#include <cstdint>

namespace chaoswm::gf256 {

// GF(2^8) with primitive polynomial x^8+x^4+x^3+x^2+1 (0x11D), generator
// alpha = 0x02. Addition is XOR.

inline constexpr std::uint16_t kPrimitivePoly = 0x11D;

std::uint8_t mul(std::uint8_t a, std::uint8_t b);
std::uint8_t inv(std::uint8_t a);  // a != 0
// alpha^e for any integer exponent (reduced mod 255).
std::uint8_t pow_alpha(int e);
// Discrete log base alpha of a != 0, in [0, 255).
int log_alpha(std::uint8_t a);

}  // namespace chaoswm::gf256

#pragma once

#include <string>

#include "chaoswm/bits.hpp"

namespace chaoswm {

// 7 bits per character, MSB first: 'L' (76) -> 1001100.
BitString text_to_bits(const std::string& text);

// Inverse of text_to_bits. Length must be a multiple of 7.
std::string bits_to_text(const BitString& bits);

// Prepends a 32-bit big-endian bit-count header so a blind extractor can
// recover the exact payload length after decoding.
BitString frame_payload(const BitString& bits);

// Strips and validates the 32-bit header. `framed` may carry trailing padding
// bits beyond header+payload (at most 7, from byte alignment); they must be 0.
BitString unframe_payload(const BitString& framed);

}  // namespace chaoswm

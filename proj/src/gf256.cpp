#include "chaoswm/gf256.hpp"

#include <array>

#include "chaoswm/errors.hpp"

namespace chaoswm::gf256 {

namespace {

struct Tables {
  // exp covers two periods so products of logs index without reduction.
  std::array<std::uint8_t, 512> exp{};
  std::array<int, 256> log{};

  Tables() {
    int x = 1;
    for (int i = 0; i < 255; ++i) {
      exp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
      log[static_cast<std::size_t>(x)] = i;
      x <<= 1;
      if (x & 0x100) x ^= kPrimitivePoly;
    }
    for (int i = 255; i < 512; ++i)
      exp[static_cast<std::size_t>(i)] = exp[static_cast<std::size_t>(i - 255)];
    log[0] = -1;
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
  if (a == 0 || b == 0) return 0;
  const Tables& t = tables();
  return t.exp[static_cast<std::size_t>(t.log[a] + t.log[b])];
}

std::uint8_t inv(std::uint8_t a) {
  if (a == 0) fail(Errc::UncorrectableBlock, "inverse of zero in GF(256)");
  const Tables& t = tables();
  return t.exp[static_cast<std::size_t>(255 - t.log[a])];
}

std::uint8_t pow_alpha(int e) {
  e %= 255;
  if (e < 0) e += 255;
  return tables().exp[static_cast<std::size_t>(e)];
}

int log_alpha(std::uint8_t a) {
  if (a == 0) fail(Errc::UncorrectableBlock, "log of zero in GF(256)");
  return tables().log[a];
}

}  // namespace chaoswm::gf256

#include <random>

#include "chaoswm/bits.hpp"
#include "chaoswm/errors.hpp"
#include "doctest.h"

using namespace chaoswm;

TEST_CASE("parse and to_string round trip") {
  BitString b = BitString::parse("10100101");
  CHECK(b.size() == 8);
  CHECK(b.to_string() == "10100101");
  CHECK(BitString::parse("").empty());
  CHECK_THROWS_AS(BitString::parse("10x"), DomainError);
}

TEST_CASE("byte packing is MSB-first") {
  CHECK(BitString::from_bytes({0xA5}, 8).to_string() == "10100101");
  CHECK(BitString::from_bytes({0xA5}, 4).to_string() == "1010");
  CHECK(BitString::from_bytes({0x80, 0x01}, 16).to_string() ==
        "1000000000000001");
  // final byte zero-padded on the right
  CHECK(BitString::parse("101").to_bytes() == std::vector<std::uint8_t>{0xA0});
  CHECK(BitString::parse("").to_bytes().empty());
  CHECK_THROWS_AS(BitString::from_bytes({0xFF}, 9), DomainError);
}

TEST_CASE("bytes round trip on byte-aligned strings") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t nbytes = rng() % 40;
    std::vector<std::uint8_t> bytes(nbytes);
    for (auto& x : bytes) x = static_cast<std::uint8_t>(rng());
    BitString b = BitString::from_bytes(bytes, nbytes * 8);
    CHECK(b.to_bytes() == bytes);
  }
}

TEST_CASE("zeros, set, flip, push_back") {
  BitString b = BitString::zeros(5);
  CHECK(b.to_string() == "00000");
  b.set(1, 1);
  b.flip(4);
  b.push_back(1);
  CHECK(b.to_string() == "010011");
  CHECK(b.bit(1) == 1);
}

TEST_CASE("slice and append") {
  BitString b = BitString::parse("110010");
  CHECK(b.slice(1, 3).to_string() == "100");
  CHECK(b.slice(0, 0).empty());
  CHECK(b.slice(6, 0).empty());
  CHECK_THROWS_AS(b.slice(4, 3), DomainError);

  BitString c = BitString::parse("01");
  b.append(c);
  CHECK(b.to_string() == "11001001");
}

TEST_CASE("equality is value equality") {
  CHECK(BitString::parse("101") == BitString::parse("101"));
  CHECK(BitString::parse("101") != BitString::parse("1010"));
  CHECK(BitString::parse("101") != BitString::parse("100"));
}

TEST_CASE("constructor rejects non-binary cell values") {
  CHECK_THROWS_AS(BitString(std::vector<std::uint8_t>{0, 2}), DomainError);
}

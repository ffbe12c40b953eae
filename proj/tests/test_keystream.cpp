#include <cmath>
#include <random>

#include "chaoswm/errors.hpp"
#include "chaoswm/keystream.hpp"
#include "doctest.h"

using namespace chaoswm;

namespace {

// Straight-line re-derivation of the keyed bit source, used as an oracle.
BitString logistic_oracle(double mu, double x0, std::uint32_t discard,
                          std::size_t n) {
  double x = x0;
  BitString out = BitString::zeros(n);
  std::size_t emitted = 0;
  for (std::size_t i = 0; i < discard + n; ++i) {
    x = mu * x * (1.0 - x);
    if (i >= discard) out.set(emitted++, x >= 0.5 ? 1 : 0);
  }
  return out;
}

}  // namespace

TEST_CASE("first logistic iterate of the default key emits a one") {
  // 3.999999 * 0.65 * 0.35 = 0.9099997725 >= 0.5
  ChaosKey key;
  CHECK(logistic_bits(key, 1).to_string() == "1");
}

TEST_CASE("logistic stream matches the re-derived orbit") {
  ChaosKey key;
  CHECK(logistic_bits(key, 1000) == logistic_oracle(key.mu, key.x0, 0, 1000));

  ChaosKey other;
  other.mu = 3.91;
  other.x0 = 0.123;
  CHECK(logistic_bits(other, 500) ==
        logistic_oracle(other.mu, other.x0, 0, 500));
}

TEST_CASE("discard drops warm-up iterations") {
  ChaosKey key;
  key.discard = 5;
  CHECK(logistic_bits(key, 200) == logistic_oracle(key.mu, key.x0, 5, 200));

  ChaosKey base;
  BitString full = logistic_bits(base, 205);
  CHECK(logistic_bits(key, 200) == full.slice(5, 200));
}

TEST_CASE("stream is deterministic across instances") {
  ChaosKey key;
  CHECK(logistic_bits(key, 20000) == logistic_bits(key, 20000));
}

TEST_CASE("group width is the bit width of the largest index") {
  CHECK(strategy_group_bits(1) == 1);
  CHECK(strategy_group_bits(2) == 1);
  CHECK(strategy_group_bits(3) == 2);
  CHECK(strategy_group_bits(4) == 2);
  CHECK(strategy_group_bits(5) == 3);
  CHECK(strategy_group_bits(756) == 10);
  CHECK(strategy_group_bits(1024) == 10);
  CHECK(strategy_group_bits(1025) == 11);
  CHECK(strategy_group_bits(16384) == 14);
  CHECK(strategy_group_bits(65536) == 16);
}

TEST_CASE("bit groups reduce modulo the domain") {
  // ten ones = 1023; 1023 mod 756 = 267
  Strategy s = bits_to_strategy(BitString::parse("1111111111"), 756);
  CHECK(s.term(0) == 267);
  CHECK(s.known_size() == 1);
  CHECK(s.domain() == 756);

  // two-bit groups over domain 4: 11 10 -> 3, 2
  Strategy t = bits_to_strategy(BitString::parse("1110"), 4);
  CHECK(t.term(0) == 3);
  CHECK(t.term(1) == 2);

  ChaosKey key;
  CHECK(bits_to_strategy(logistic_bits(key, 20000), 756).known_size() == 2000);

  CHECK_THROWS_AS(bits_to_strategy(BitString::zeros(15), 756), DomainError);
  try {
    bits_to_strategy(BitString::zeros(15), 756);
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::LengthNotMultipleOfGroup);
  }
}

TEST_CASE("keyed strategies group ten by ten up to domain 1024") {
  ChaosKey key;
  BitString lead = logistic_bits(key, 110);

  // small domains still consume 10 bits per term
  Strategy small = keyed_strategy(key, 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 10; ++i) v = (v << 1) | static_cast<std::uint32_t>(lead.bit(i));
  CHECK(small.term(0) == v % 4);

  Strategy mid = keyed_strategy(key, 756);
  CHECK(mid.term(0) == v % 756);
  for (int k = 0; k < 11; ++k) CHECK(mid.term(k) < 756);

  // beyond 1024 the group widens to the index width
  Strategy wide = keyed_strategy(key, 2000);
  std::uint32_t w = 0;
  for (int i = 0; i < 11; ++i) w = (w << 1) | static_cast<std::uint32_t>(lead.bit(i));
  CHECK(wide.term(0) == w % 2000);
}

TEST_CASE("placement triplets start at the seed and recur affinely") {
  ChaosKey key;  // seeds (11, 23, 1)
  Strategy s(std::vector<std::uint32_t>{743, 5, 8, 100, 200, 3}, 1024);
  auto tri = triplet_stream(s, key, 3);
  REQUIRE(tri.size() == 3);
  CHECK(tri[0].x == 11);
  CHECK(tri[0].y == 23);
  CHECK(tri[0].z == 1);
  // (2*11 + 743 + 0) mod 255 = 765 mod 255 = 0
  CHECK(tri[1].x == 0);
  CHECK(tri[1].y == 51);
  CHECK(tri[1].z == 1);
  CHECK(tri[2].x == 101);
  CHECK(tri[2].y == 48);
  CHECK(tri[2].z == 1);

  // the incremental stream agrees with the materialized one
  TripletStream inc(s, key);
  for (const auto& t : tri) {
    Triplet u = inc.next();
    CHECK(u.x == t.x);
    CHECK(u.y == t.y);
    CHECK(u.z == t.z);
  }
}

TEST_CASE("triplets stay inside their ranges") {
  ChaosKey key;
  auto tri = triplet_stream(keyed_strategy(key, 1024), key, 500);
  for (const auto& t : tri) {
    CHECK(t.x < 255);
    CHECK(t.y < 255);
    CHECK((t.z == 1 || t.z == 2));
  }
}

TEST_CASE("recurrent switch strategy follows its defining recursion") {
  Strategy s(std::vector<std::uint32_t>{5, 10, 20, 40}, 100);
  Strategy u = u_strategy(s, 7, 100, 4);
  CHECK(u.known_size() == 4);
  CHECK(u.term(0) == 7);
  CHECK(u.term(1) == 24);  // (10 + 2*7 + 0) mod 100
  CHECK(u.term(2) == 69);  // (20 + 2*24 + 1) mod 100
  CHECK(u.term(3) == 80);  // (40 + 2*69 + 2) mod 100

  // unset seed falls back to S^0 mod M
  Strategy v = u_strategy(s, std::nullopt, 100, 2);
  CHECK(v.term(0) == 5);
  CHECK(v.term(1) == 20);

  CHECK(u_strategy(s, 7, 100, 0).empty());
}

TEST_CASE("seed differences die out over power-of-two domains") {
  // U^{n+1} = S^{n+1} + 2 U^n + n (mod 2^14): a seed delta is multiplied by
  // two each step, so after 14 steps the two streams coincide.
  ChaosKey key;
  Strategy s = keyed_strategy(key, 2000);
  Strategy a = u_strategy(s, 1, 16384, 40);
  Strategy b = u_strategy(s, 2, 16384, 40);
  CHECK(a.term(0) != b.term(0));
  for (std::size_t k = 14; k < 40; ++k) CHECK(a.term(k) == b.term(k));
}

TEST_CASE("bit digest starts at the offset basis and responds to every bit") {
  CHECK(fnv1a64_bits(BitString()) == 0xcbf29ce484222325ull);

  // one bit with value 1: xor then multiply by the prime
  std::uint64_t expect = (0xcbf29ce484222325ull ^ 1ull) * 0x100000001b3ull;
  CHECK(fnv1a64_bits(BitString::parse("1")) == expect);

  std::mt19937 rng(41);
  BitString base = BitString::zeros(1000);
  for (std::size_t i = 0; i < base.size(); ++i) base.set(i, rng() & 1);
  std::uint64_t h = fnv1a64_bits(base);
  for (int trial = 0; trial < 20; ++trial) {
    BitString mut = base;
    mut.flip(rng() % mut.size());
    CHECK(fnv1a64_bits(mut) != h);
  }
}

TEST_CASE("authenticated keys fold the content digest into the seed") {
  ChaosKey key;
  BitString msc = BitString::parse("101100111000");
  ChaosKey folded = authenticated_key(key, msc);
  CHECK(folded.x0 != key.x0);
  CHECK(folded.x0 > 0.0);
  CHECK(folded.x0 < 1.0);
  CHECK(folded.auth_msc_digest == fnv1a64_bits(msc));
  // deterministic
  CHECK(authenticated_key(key, msc).x0 == folded.x0);
  // sensitive to a single content bit
  BitString other = msc;
  other.flip(3);
  CHECK(authenticated_key(key, other).x0 != folded.x0);
}

TEST_CASE("key files round trip bit for bit") {
  ChaosKey key;
  key.mu = std::nextafter(4.0, 0.0);
  key.x0 = 0.1 + 0.2;  // 0.30000000000000004, not representable in short form
  key.discard = 3;
  key.u0 = 7;
  key.triplet_x0 = 200;
  key.triplet_y0 = 100;
  key.triplet_z0 = 2;
  key.auth_msc_digest = 0xDEADBEEF12345678ull;

  ChaosKey back = ChaosKey::deserialize(key.serialize());
  CHECK(back.mu == key.mu);
  CHECK(back.x0 == key.x0);
  CHECK(back.discard == key.discard);
  CHECK(back.u0 == key.u0);
  CHECK(back.triplet_x0 == key.triplet_x0);
  CHECK(back.triplet_y0 == key.triplet_y0);
  CHECK(back.triplet_z0 == key.triplet_z0);
  CHECK(back.auth_msc_digest == key.auth_msc_digest);
  CHECK(back.fingerprint() == key.fingerprint());

  // the default key keeps its unset switch seed
  ChaosKey plain;
  ChaosKey plain_back = ChaosKey::deserialize(plain.serialize());
  CHECK(!plain_back.u0.has_value());
  CHECK(!plain_back.auth_msc_digest.has_value());
}

TEST_CASE("fingerprints separate different keys") {
  ChaosKey a, b;
  b.mu = 3.93;
  CHECK(a.fingerprint() != b.fingerprint());
  ChaosKey c;
  c.u0 = 7;
  CHECK(a.fingerprint() != c.fingerprint());
}

TEST_CASE("malformed or out-of-range key files are rejected") {
  CHECK_THROWS_AS(ChaosKey::deserialize("bogus_field = 1\n"), DomainError);
  CHECK_THROWS_AS(ChaosKey::deserialize("mu 3.9\n"), DomainError);
  CHECK_THROWS_AS(ChaosKey::deserialize("mu = 4.5\n"), DomainError);
  CHECK_THROWS_AS(ChaosKey::deserialize("x0 = 1.0\n"), DomainError);
  CHECK_THROWS_AS(ChaosKey::deserialize("x0 = abc\n"), DomainError);
  CHECK_THROWS_AS(ChaosKey::deserialize("triplet_z0 = 3\n"), DomainError);
  CHECK_THROWS_AS(ChaosKey::deserialize("triplet_x0 = 255\n"), DomainError);
  // comments and blank lines are fine
  ChaosKey ok = ChaosKey::deserialize("# comment\n\nmu = 3.5\n");
  CHECK(ok.mu == 3.5);

  ChaosKey bad;
  bad.mu = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad.mu = 4.0;  // the boundary itself is legal
  CHECK_NOTHROW(bad.validate());
  bad.x0 = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  try {
    ChaosKey::deserialize("mu = 4.5\n");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::BadKeyFile);
  }
}

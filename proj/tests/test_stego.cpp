#include <random>
#include <set>
#include <string>
#include <tuple>

#include "chaoswm/attacks.hpp"
#include "chaoswm/circ.hpp"
#include "chaoswm/errors.hpp"
#include "chaoswm/metrics.hpp"
#include "chaoswm/payload.hpp"
#include "chaoswm/pgm.hpp"
#include "chaoswm/stego.hpp"
#include "doctest.h"

using namespace chaoswm;

namespace {

BitString random_bits(std::mt19937& rng, std::size_t n) {
  BitString b = BitString::zeros(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng() & 1);
  return b;
}

std::vector<std::uint32_t> random_terms(std::mt19937& rng, std::size_t n,
                                        std::uint32_t domain) {
  std::vector<std::uint32_t> t(n);
  for (auto& v : t) v = rng() % domain;
  return t;
}

// Coded-stream bit count for a text of the given length, mirroring the
// documented pipeline geometry.
std::size_t coded_bits_for(std::size_t text_len) {
  std::size_t frame_bits = 32 + 7 * text_len;
  std::size_t frame_bytes = (frame_bits + 7) / 8;
  return 8 * circ_encoded_size(CircConfig{}, frame_bytes);
}

}  // namespace

TEST_CASE("whitening is an involution") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 1 + rng() % 96;
    std::size_t steps = rng() % 60;
    Strategy s(random_terms(rng, steps, static_cast<std::uint32_t>(n)),
               static_cast<std::uint32_t>(n));
    BitString b = random_bits(rng, n);
    CHECK(mix(mix(b, s, steps), s, steps) == b);
  }
}

TEST_CASE("whitening mechanics") {
  BitString b = BitString::parse("0000");
  Strategy s(std::vector<std::uint32_t>{2}, 4);
  CHECK(mix(b, s, 1).to_string() == "0010");  // one step flips one place
  CHECK(mix(b, s, 0) == b);                   // zero steps is the identity
  CHECK(mix(BitString(), Strategy(), 5).empty());  // nothing to whiten

  // the full-strength keyed configuration is still an involution
  ChaosKey key;
  std::mt19937 rng(5);
  BitString payload = random_bits(rng, 256);
  Strategy keyed = keyed_strategy(key, 256);
  BitString mixed = mix(payload, keyed, kMixSteps);
  CHECK(mixed != payload);
  CHECK(mix(mixed, keyed_strategy(key, 256), kMixSteps) == payload);

  Strategy wrong(std::vector<std::uint32_t>{0}, 5);
  CHECK_THROWS_AS(mix(BitString::zeros(4), wrong, 1), DomainError);
}

TEST_CASE("capacity counts two planes of the addressable square") {
  CHECK(spatial_capacity(256, 256) == 130050);  // 2 * 255 * 255
  CHECK(spatial_capacity(300, 40) == 2 * 255 * 40);
  CHECK(spatial_capacity(10, 10) == 200);
  CHECK(spatial_capacity(1000, 1000) == 130050);
}

TEST_CASE("plans are deterministic, distinct and prefix-stable") {
  ChaosKey key;
  SpatialEmbedPlan plan = build_plan(key, 256, 256, 2112);
  CHECK(plan.placements.size() == 2112);
  CHECK(plan.message_bits == 2112);
  CHECK(build_plan(key, 256, 256, 2112).placements == plan.placements);

  std::set<std::tuple<int, int, int>> seen;
  for (const auto& p : plan.placements) {
    CHECK(p.row < 255);
    CHECK(p.col < 255);
    CHECK((p.plane == 1 || p.plane == 2));
    seen.insert({p.row, p.col, p.plane});
  }
  CHECK(seen.size() == plan.placements.size());

  SpatialEmbedPlan shorter = build_plan(key, 256, 256, 500);
  for (std::size_t i = 0; i < 500; ++i)
    CHECK(shorter.placements[i] == plan.placements[i]);

  CHECK(build_plan(key, 256, 256, 0).placements.empty());

  // a different key writes a different plan
  ChaosKey other;
  other.x0 = 0.37;
  CHECK(build_plan(other, 256, 256, 2112).placements != plan.placements);
}

TEST_CASE("plan coordinates spread uniformly") {
  ChaosKey key;
  SpatialEmbedPlan plan = build_plan(key, 256, 256, 10000);
  double expected = 10000.0 / 255.0;
  double chi_rows = 0, chi_cols = 0;
  int rows[255] = {0}, cols[255] = {0};
  std::size_t first_plane = 0;
  for (const auto& p : plan.placements) {
    ++rows[p.row];
    ++cols[p.col];
    if (p.plane == 1) ++first_plane;
  }
  for (int i = 0; i < 255; ++i) {
    chi_rows += (rows[i] - expected) * (rows[i] - expected) / expected;
    chi_cols += (cols[i] - expected) * (cols[i] - expected) / expected;
  }
  // 99th percentile of chi-square with 254 degrees of freedom
  CHECK(chi_rows < 309.4);
  CHECK(chi_cols < 309.4);
  CHECK(first_plane > 4500);
  CHECK(first_plane < 5500);
}

TEST_CASE("plans refuse impossible or impractical requests") {
  ChaosKey key;
  CHECK_THROWS_AS(build_plan(key, 16, 16, 513), DomainError);
  try {
    build_plan(key, 16, 16, 513);
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::CapacityExceeded);
  }
  // a 4x4 corner of the 255x255 grid is hit too rarely to fill
  CHECK_THROWS_AS(build_plan(key, 4, 4, 32), DomainError);
  try {
    build_plan(key, 4, 4, 32);
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::PlanExhausted);
  }
}

TEST_CASE("embedding and extraction invert each other") {
  GrayImage cover = synth_test_image(256, 256, 7);
  ChaosKey key;
  std::mt19937 rng(7);
  for (const std::string& text :
       {std::string(""), std::string("a"),
        std::string("Steganography by chaotic bit-plane substitution."),
        [&rng] {
          std::string s;
          for (int i = 0; i < 200; ++i)
            s.push_back(static_cast<char>(32 + rng() % 95));
          return s;
        }()}) {
    GrayImage stego = embed(cover, text, key);
    CHECK(extract(stego, key) == text);
  }

  ChaosKey other;
  other.discard = 7;
  GrayImage stego = embed(cover, "second key", other);
  CHECK(extract(stego, other) == "second key");
}

TEST_CASE("embedding touches only planned low bits") {
  GrayImage cover = synth_test_image(256, 256, 1);
  ChaosKey key;
  std::string text = "carrier inspection";
  GrayImage stego = embed(cover, text, key);

  std::size_t total = kPlanHeaderBits + coded_bits_for(text.size());
  SpatialEmbedPlan plan = build_plan(key, 256, 256, total);
  std::set<std::pair<int, int>> sites;
  for (const auto& p : plan.placements) sites.insert({p.row, p.col});

  std::size_t changed = 0;
  for (std::uint32_t r = 0; r < 256; ++r)
    for (std::uint32_t c = 0; c < 256; ++c) {
      std::uint8_t a = cover.at(r, c), b = stego.at(r, c);
      if (a == b) continue;
      ++changed;
      CHECK((a ^ b) <= 3);  // only the two lowest planes move
      CHECK(sites.count({static_cast<int>(r), static_cast<int>(c)}) == 1);
    }
  CHECK(changed > 0);
  CHECK(changed <= total);

  // the significant planes every pixel keeps are bit-identical
  CHECK(read_msc(cover, {7, 6, 5, 4}) == read_msc(stego, {7, 6, 5, 4}));

  CHECK(psnr(cover, stego) > 50.0);
}

TEST_CASE("the header is recovered by majority vote") {
  GrayImage cover = synth_test_image(256, 256, 9);
  ChaosKey key;
  std::string text = "majority voting at work";
  GrayImage stego = embed(cover, text, key);

  // wreck seven of the fifteen header replicas; eight intact copies win
  SpatialEmbedPlan header = build_plan(key, 256, 256, kPlanHeaderBits);
  GrayImage hit = stego;
  for (std::size_t i = 0; i < 7 * kLengthHeaderBits; ++i) {
    const Placement& p = header.placements[i];
    hit.at(p.row, p.col) ^= static_cast<std::uint8_t>(p.plane);
  }
  CHECK(extract(hit, key) == text);
}

TEST_CASE("extraction survives a forty-pixel square erasure") {
  GrayImage cover = synth_test_image(256, 256, 7);
  ChaosKey key;
  std::string text =
      "the quick brown fox jumps over the lazy dog carries this payload";
  GrayImage stego = embed(cover, text, key);
  GrayImage attacked = attack_zero_square(stego, 100, 100, 40);
  CHECK(extract(attacked, key) == text);
}

TEST_CASE("a wrong key never quietly returns text") {
  GrayImage cover = synth_test_image(256, 256, 7);
  ChaosKey key;
  GrayImage stego = embed(cover, "locked to one key", key);
  std::mt19937 rng(11);
  int rejected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    ChaosKey wrong;
    wrong.x0 = 0.05 + 0.9 * (static_cast<double>(rng() % 10000) / 10000.0);
    if (wrong.x0 == key.x0) continue;
    try {
      (void)extract(stego, wrong);
    } catch (const DomainError&) {
      ++rejected;
    }
  }
  CHECK(rejected >= 99);
}

TEST_CASE("authenticated extraction is keyed to the significant planes") {
  GrayImage cover = synth_test_image(256, 256, 13);
  ChaosKey key;
  std::string text = "content-bound placement";
  GrayImage stego = embed(cover, text, key, true);
  CHECK(extract(stego, key, true) == text);

  // forgetting the mode desynchronizes the whole plan
  CHECK_THROWS_AS(extract(stego, key, false), DomainError);

  // so does touching a single significant bit
  GrayImage tampered = stego;
  tampered.at(0, 0) ^= 0x80;
  CHECK_THROWS_AS(extract(tampered, key, true), DomainError);

  // plain embedding is indifferent to the significant planes
  CHECK(extract(embed(cover, text, key), key) == text);
}

TEST_CASE("covers that cannot hold the message are refused") {
  GrayImage tiny(32, 32, 100);
  ChaosKey key;
  std::string big(200, 'x');
  CHECK_THROWS_AS(embed(tiny, big, key), DomainError);
  try {
    embed(tiny, big, key);
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::CapacityExceeded);
  }
}

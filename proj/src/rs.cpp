#include "chaoswm/rs.hpp"

#include <algorithm>

#include "chaoswm/errors.hpp"
#include "chaoswm/gf256.hpp"

namespace chaoswm {

namespace gf = gf256;

// Convention: received[j] is the coefficient of x^{n-1-j}, i.e. data first,
// highest degree first. An error at byte j has locator X = alpha^{n-1-j}.

void RsCode::validate() const {
  if (k == 0 || n <= k || n > 255)
    fail(Errc::WrongBlockLength, "invalid RS geometry");
  if ((n - k) % 2 != 0)
    fail(Errc::WrongBlockLength, "parity count must be even");
}

namespace {

std::vector<std::uint8_t> generator_poly(const RsCode& code) {
  // g(x) = prod (x - alpha^{root_offset+i}), ascending powers of alpha.
  std::vector<std::uint8_t> g{1};
  for (std::uint32_t i = 0; i < code.parity(); ++i) {
    std::uint8_t root = gf::pow_alpha(static_cast<int>(code.root_offset + i));
    std::vector<std::uint8_t> next(g.size() + 1, 0);
    for (std::size_t j = 0; j < g.size(); ++j) {
      next[j] ^= gf::mul(g[j], root);
      next[j + 1] ^= g[j];
    }
    g = std::move(next);
  }
  // Highest degree first to match the LFSR below.
  std::reverse(g.begin(), g.end());
  return g;
}

}  // namespace

std::vector<std::uint8_t> rs_encode(const RsCode& code,
                                    std::span<const std::uint8_t> data) {
  code.validate();
  if (data.size() != code.k)
    fail(Errc::WrongBlockLength,
         "expected " + std::to_string(code.k) + " data bytes, got " +
             std::to_string(data.size()));
  std::vector<std::uint8_t> g = generator_poly(code);
  std::uint32_t p = code.parity();
  std::vector<std::uint8_t> rem(p, 0);
  for (std::uint8_t d : data) {
    std::uint8_t feedback = static_cast<std::uint8_t>(d ^ rem[0]);
    for (std::uint32_t j = 0; j + 1 < p; ++j)
      rem[j] = static_cast<std::uint8_t>(rem[j + 1] ^ gf::mul(feedback, g[j + 1]));
    rem[p - 1] = gf::mul(feedback, g[p]);
  }
  std::vector<std::uint8_t> out(data.begin(), data.end());
  out.insert(out.end(), rem.begin(), rem.end());
  return out;
}

RsDecodeResult rs_decode(const RsCode& code,
                         std::span<const std::uint8_t> received) {
  code.validate();
  if (received.size() != code.n)
    fail(Errc::WrongBlockLength,
         "expected " + std::to_string(code.n) + " bytes, got " +
             std::to_string(received.size()));
  const std::uint32_t n = code.n;
  const std::uint32_t p = code.parity();
  const std::uint32_t t = code.t();

  std::vector<std::uint8_t> word(received.begin(), received.end());

  auto syndromes = [&](const std::vector<std::uint8_t>& w) {
    std::vector<std::uint8_t> s(p, 0);
    for (std::uint32_t i = 0; i < p; ++i) {
      std::uint8_t alpha_i = gf::pow_alpha(static_cast<int>(code.root_offset + i));
      std::uint8_t acc = 0;
      for (std::uint32_t j = 0; j < n; ++j)
        acc = static_cast<std::uint8_t>(gf::mul(acc, alpha_i) ^ w[j]);
      s[i] = acc;
    }
    return s;
  };

  std::vector<std::uint8_t> synd = syndromes(word);
  bool clean = std::all_of(synd.begin(), synd.end(),
                           [](std::uint8_t v) { return v == 0; });
  if (clean)
    return {std::vector<std::uint8_t>(word.begin(), word.begin() + code.k), 0};

  // Berlekamp-Massey: find the error locator Lambda with Lambda(0) = 1.
  std::vector<std::uint8_t> lambda{1}, prev{1};
  std::uint32_t l = 0;
  std::uint8_t b = 1;
  std::uint32_t m = 1;
  for (std::uint32_t i = 0; i < p; ++i) {
    std::uint8_t delta = synd[i];
    for (std::uint32_t j = 1; j <= l && j < lambda.size(); ++j)
      delta ^= gf::mul(lambda[j], synd[i - j]);
    if (delta == 0) {
      ++m;
      continue;
    }
    std::vector<std::uint8_t> adjusted = lambda;
    std::uint8_t coef = gf::mul(delta, gf::inv(b));
    if (adjusted.size() < prev.size() + m) adjusted.resize(prev.size() + m, 0);
    for (std::size_t j = 0; j < prev.size(); ++j)
      adjusted[j + m] ^= gf::mul(coef, prev[j]);
    if (2 * l <= i) {
      prev = lambda;
      l = i + 1 - l;
      b = delta;
      m = 1;
    } else {
      ++m;
    }
    lambda = std::move(adjusted);
  }
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  std::uint32_t deg = static_cast<std::uint32_t>(lambda.size()) - 1;
  if (deg == 0 || deg > t || deg != l)
    fail(Errc::UncorrectableBlock, "error locator degree beyond capability");

  // Chien search restricted to the unshortened positions.
  std::vector<std::uint32_t> error_pos;  // byte indices
  for (std::uint32_t d = 0; d < n; ++d) {
    // Candidate locator X = alpha^d for degree d <=> byte n-1-d.
    std::uint8_t x_inv = gf::pow_alpha(-static_cast<int>(d));
    std::uint8_t acc = 0;
    for (std::size_t j = lambda.size(); j-- > 0;)
      acc = static_cast<std::uint8_t>(gf::mul(acc, x_inv) ^ lambda[j]);
    if (acc == 0) error_pos.push_back(n - 1 - d);
  }
  if (error_pos.size() != deg)
    fail(Errc::UncorrectableBlock, "locator roots outside the block");

  // Forney: Omega = S * Lambda mod x^{2t}; magnitude at X is
  // X^{1-offset} * Omega(X^{-1}) / Lambda'(X^{-1}).
  std::vector<std::uint8_t> omega(p, 0);
  for (std::size_t i = 0; i < p; ++i) {
    std::uint8_t acc = 0;
    for (std::size_t j = 0; j <= i && j < lambda.size(); ++j)
      acc ^= gf::mul(lambda[j], synd[i - j]);
    omega[i] = acc;
  }
  for (std::uint32_t pos : error_pos) {
    int d = static_cast<int>(n - 1 - pos);
    std::uint8_t x_inv = gf::pow_alpha(-d);
    std::uint8_t om = 0;
    for (std::size_t j = omega.size(); j-- > 0;)
      om = static_cast<std::uint8_t>(gf::mul(om, x_inv) ^ omega[j]);
    // Formal derivative of Lambda keeps odd-degree terms.
    std::uint8_t dl = 0;
    for (std::size_t j = 1; j < lambda.size(); j += 2) {
      std::uint8_t term = lambda[j];
      std::uint8_t xp = gf::pow_alpha(-d * static_cast<int>(j - 1));
      dl ^= gf::mul(term, xp);
    }
    if (dl == 0) fail(Errc::UncorrectableBlock, "degenerate error locator");
    std::uint8_t mag = gf::mul(om, gf::inv(dl));
    std::uint8_t scale =
        gf::pow_alpha(d * (1 - static_cast<int>(code.root_offset)));
    word[pos] ^= gf::mul(mag, scale);
  }

  // A pattern beyond t errors can pass Berlekamp-Massey and Forney with a
  // bogus correction; re-checking the syndromes on the corrected word flags
  // those instead of returning silent garbage.
  std::vector<std::uint8_t> recheck = syndromes(word);
  if (!std::all_of(recheck.begin(), recheck.end(),
                   [](std::uint8_t v) { return v == 0; }))
    fail(Errc::UncorrectableBlock, "post-correction syndrome recheck failed");

  return {std::vector<std::uint8_t>(word.begin(), word.begin() + code.k),
          static_cast<std::uint32_t>(error_pos.size())};
}

}  // namespace chaoswm

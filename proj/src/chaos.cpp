#include "chaoswm/chaos.hpp"

#include <utility>

#include "chaoswm/errors.hpp"

namespace chaoswm {

SystemState::SystemState(std::vector<std::uint8_t> cells)
    : cells_(std::move(cells)) {
  for (auto& c : cells_) c &= 1;
}

SystemState SystemState::from_bits(const BitString& bits) {
  SystemState s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    s.cells_[i] = static_cast<std::uint8_t>(bits.bit(i));
  return s;
}

BitString SystemState::to_bits() const {
  BitString out = BitString::zeros(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) out.set(i, cells_[i]);
  return out;
}

struct Strategy::Source {
  Generator gen;                     // null for fully materialized streams
  std::vector<std::uint32_t> memo;
  bool exhausted = false;
  std::uint32_t domain = 1;

  // Ensures memo covers index k; returns false when the stream ends first.
  bool materialize(std::size_t k) {
    while (memo.size() <= k) {
      if (exhausted || !gen) return memo.size() > k;
      auto v = gen();
      if (!v) {
        exhausted = true;
        return false;
      }
      memo.push_back(*v % domain);
    }
    return true;
  }
};

Strategy::Strategy() : Strategy(std::vector<std::uint32_t>{}, 1) {}

Strategy::Strategy(std::vector<std::uint32_t> terms, std::uint32_t domain) {
  if (domain == 0) fail(Errc::DimensionMismatch, "strategy domain must be >= 1");
  src_ = std::make_shared<Source>();
  src_->domain = domain;
  src_->exhausted = true;
  src_->memo = std::move(terms);
  for (auto& t : src_->memo) t %= domain;
}

Strategy::Strategy(Generator gen, std::uint32_t domain) {
  if (domain == 0) fail(Errc::DimensionMismatch, "strategy domain must be >= 1");
  src_ = std::make_shared<Source>();
  src_->domain = domain;
  src_->gen = std::move(gen);
}

Strategy::Strategy(std::shared_ptr<Source> src, std::size_t offset)
    : src_(std::move(src)), offset_(offset) {}

std::uint32_t Strategy::domain() const { return src_->domain; }

std::optional<std::uint32_t> Strategy::try_term(std::size_t k) const {
  if (!src_->materialize(offset_ + k)) return std::nullopt;
  return src_->memo[offset_ + k];
}

std::uint32_t Strategy::term(std::size_t k) const {
  auto v = try_term(k);
  if (!v)
    fail(Errc::StrategyExhausted,
         "term " + std::to_string(k) + " past end of stream");
  return *v;
}

std::optional<std::size_t> Strategy::known_size() const {
  if (src_->gen && !src_->exhausted) return std::nullopt;
  std::size_t total = src_->memo.size();
  return total > offset_ ? total - offset_ : 0;
}

Strategy Strategy::shifted() const { return Strategy(src_, offset_ + 1); }

std::uint32_t initial(const Strategy& s) {
  auto v = s.try_term(0);
  if (!v) fail(Errc::EmptyStrategy, "initial of an empty strategy");
  return *v;
}

Strategy shift(const Strategy& s) {
  if (s.empty()) fail(Errc::EmptyStrategy, "shift of an empty strategy");
  return s.shifted();
}

SystemState negation(const SystemState& x) {
  SystemState out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out.flip(i);
  return out;
}

SystemState iterate(SystemState x0, const Strategy& s, const IterateFn& f,
                    std::size_t n) {
  if (n > 0 && s.domain() != x0.size())
    fail(Errc::DimensionMismatch, "strategy domain differs from state size");
  for (std::size_t k = 0; k < n; ++k) {
    std::uint32_t idx = s.term(k);
    SystemState fx = f(x0);
    if (fx.size() != x0.size())
      fail(Errc::DimensionMismatch, "iteration map changed the state size");
    x0.set(idx, fx.cell(idx));
  }
  return x0;
}

SystemState iterate_negation(SystemState x0, const Strategy& s,
                             std::size_t n) {
  if (n > 0 && s.domain() != x0.size())
    fail(Errc::DimensionMismatch, "strategy domain differs from state size");
  for (std::size_t k = 0; k < n; ++k) x0.flip(s.term(k));
  return x0;
}

}  // namespace chaoswm

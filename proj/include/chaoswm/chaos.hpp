#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "chaoswm/bits.hpp"

namespace chaoswm {

// Boolean system state: a fixed-size vector of cells in {0,1}.
class SystemState {
 public:
  SystemState() = default;
  explicit SystemState(std::size_t size) : cells_(size, 0) {}
  explicit SystemState(std::vector<std::uint8_t> cells);
  static SystemState from_bits(const BitString& bits);

  BitString to_bits() const;
  std::size_t size() const { return cells_.size(); }
  int cell(std::size_t i) const { return cells_[i]; }
  void set(std::size_t i, int v) { cells_[i] = static_cast<std::uint8_t>(v & 1); }
  void flip(std::size_t i) { cells_[i] ^= 1; }

  bool operator==(const SystemState&) const = default;

 private:
  std::vector<std::uint8_t> cells_;
};

// Index sequence over a domain [0, M). Terms are produced lazily from a
// generator and memoized, so a strategy can be consumed term by term, be
// re-read from the start, or be shared between pipeline stages. Streams are
// single-consumer: not safe for concurrent use. Copies share the memo;
// re-deriving from the key restarts the stream.
class Strategy {
 public:
  using Generator = std::function<std::optional<std::uint32_t>()>;

  Strategy();  // empty, domain 1
  Strategy(std::vector<std::uint32_t> terms, std::uint32_t domain);
  Strategy(Generator gen, std::uint32_t domain);

  std::uint32_t domain() const;
  // k-th term counted from this view's start. Throws StrategyExhausted past
  // the end of a finite stream.
  std::uint32_t term(std::size_t k) const;
  std::optional<std::uint32_t> try_term(std::size_t k) const;
  bool empty() const { return !try_term(0).has_value(); }
  // Number of terms if the stream is finite and fully known; nullopt for
  // unbounded generators.
  std::optional<std::size_t> known_size() const;

  // View advanced by one term (the shift map on sequences). Shares the memo.
  Strategy shifted() const;

 private:
  struct Source;
  Strategy(std::shared_ptr<Source> src, std::size_t offset);
  std::shared_ptr<Source> src_;
  std::size_t offset_ = 0;
};

// First term S^0. Throws EmptyStrategy on an exhausted stream.
std::uint32_t initial(const Strategy& s);
// Strategy without its first term. Throws EmptyStrategy on an exhausted
// stream (shifting a 1-term strategy yields a valid empty strategy).
Strategy shift(const Strategy& s);

// Vectorial negation: flips every cell.
SystemState negation(const SystemState& x);

using IterateFn = std::function<SystemState(const SystemState&)>;

// Chaotic iterations: at step k only cell s[k] is updated, receiving
// component s[k] of f(previous state). Throws DimensionMismatch when the
// strategy domain differs from the state size, StrategyExhausted when fewer
// than n terms are available.
SystemState iterate(SystemState x0, const Strategy& s, const IterateFn& f,
                    std::size_t n);

// Same semantics with f = negation, without re-evaluating the full image:
// updating cell i with component i of the negation flips that cell.
SystemState iterate_negation(SystemState x0, const Strategy& s, std::size_t n);

}  // namespace chaoswm

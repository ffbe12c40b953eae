#pragma once

#include <stdexcept>
#include <string>

namespace chaoswm {

// Stable error codes. The CLI maps any DomainError to exit code 1 and prints
// the code name, so names here are part of the tool's observable interface.
enum class Errc {
  NonAsciiCharacter,
  LengthNotMultipleOf7,
  PayloadTooLarge,
  EmptyStrategy,
  StrategyExhausted,
  DimensionMismatch,
  LengthNotMultipleOfGroup,
  WrongBlockLength,
  UncorrectableBlock,
  MalformedFrame,
  DimensionNotDyadic,
  InconsistentPyramid,
  BadSelector,
  SizeMismatch,
  BadBitIndex,
  CapacityExceeded,
  PlanExhausted,
  OutOfBounds,
  MalformedHeader,
  UnsupportedMaxval,
  TruncatedRaster,
  BadKeyFile,
};

const char* errc_name(Errc c);

class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& detail);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail = "");

}  // namespace chaoswm

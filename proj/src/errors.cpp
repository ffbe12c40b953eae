#include "chaoswm/errors.hpp"

namespace chaoswm {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonAsciiCharacter: return "NonAsciiCharacter";
    case Errc::LengthNotMultipleOf7: return "LengthNotMultipleOf7";
    case Errc::PayloadTooLarge: return "PayloadTooLarge";
    case Errc::EmptyStrategy: return "EmptyStrategy";
    case Errc::StrategyExhausted: return "StrategyExhausted";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::LengthNotMultipleOfGroup: return "LengthNotMultipleOfGroup";
    case Errc::WrongBlockLength: return "WrongBlockLength";
    case Errc::UncorrectableBlock: return "UncorrectableBlock";
    case Errc::MalformedFrame: return "MalformedFrame";
    case Errc::DimensionNotDyadic: return "DimensionNotDyadic";
    case Errc::InconsistentPyramid: return "InconsistentPyramid";
    case Errc::BadSelector: return "BadSelector";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::BadBitIndex: return "BadBitIndex";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::PlanExhausted: return "PlanExhausted";
    case Errc::OutOfBounds: return "OutOfBounds";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::UnsupportedMaxval: return "UnsupportedMaxval";
    case Errc::TruncatedRaster: return "TruncatedRaster";
    case Errc::BadKeyFile: return "BadKeyFile";
  }
  return "UnknownError";
}

DomainError::DomainError(Errc code, const std::string& detail)
    : std::runtime_error(detail.empty()
                             ? std::string(errc_name(code))
                             : std::string(errc_name(code)) + ": " + detail),
      code_(code) {}

void fail(Errc code, const std::string& detail) {
  throw DomainError(code, detail);
}

}  // namespace chaoswm

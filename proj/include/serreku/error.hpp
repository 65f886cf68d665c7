#pragma once

/**
 * @file error.hpp
 * @brief Error type shared by every serreku module.
 *
 * All failures are reported as serreku::Error, which carries a machine
 * readable code next to the human message. The CLI maps codes to exit
 * statuses; tests assert on codes rather than message text.
 */

#include <stdexcept>
#include <string>
#include <string_view>

namespace serreku {

enum class ErrorCode {
  SingularMatrix,
  IncompatibleRadicands,
  UnsupportedGenus,
  UnknownObject,
  MissingCh3,
  MissingTodd,
  ZeroClass,
  NonPositiveAlphaSq,
  OutsideRegion,
  NegativeDenominator,
  ZeroOverZero,
  NoRealIntersection,
  VerticalLine,
  NotInLattice,
  SingularCharge,
  NotOrientationPreserving,
  EmptyWindow,
  ParseError,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::IncompatibleRadicands: return "IncompatibleRadicands";
    case ErrorCode::UnsupportedGenus: return "UnsupportedGenus";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::MissingCh3: return "MissingCh3";
    case ErrorCode::MissingTodd: return "MissingTodd";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::NonPositiveAlphaSq: return "NonPositiveAlphaSq";
    case ErrorCode::OutsideRegion: return "OutsideRegion";
    case ErrorCode::NegativeDenominator: return "NegativeDenominator";
    case ErrorCode::ZeroOverZero: return "ZeroOverZero";
    case ErrorCode::NoRealIntersection: return "NoRealIntersection";
    case ErrorCode::VerticalLine: return "VerticalLine";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::SingularCharge: return "SingularCharge";
    case ErrorCode::NotOrientationPreserving: return "NotOrientationPreserving";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace serreku

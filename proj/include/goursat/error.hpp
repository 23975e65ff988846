#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace goursat {

enum class ErrorCode {
  MalformedSgv,
  MalformedDerived,
  BadAlphabet,
  TAfterR,
  MissingLeadingRR,
  NotRealizable,
  RoundTripFailure,
  NotCritical,
  NoCriticalLetters,
  SingleStage,
  MalformedCriticalString,
  Overflow,
  BadlyParametrized,
  InvalidPuiseux,
  InvalidBranch,
  Precondition,
  Parse,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedSgv: return "MalformedSgv";
    case ErrorCode::MalformedDerived: return "MalformedDerived";
    case ErrorCode::BadAlphabet: return "BadAlphabet";
    case ErrorCode::TAfterR: return "TAfterR";
    case ErrorCode::MissingLeadingRR: return "MissingLeadingRR";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::RoundTripFailure: return "RoundTripFailure";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::NoCriticalLetters: return "NoCriticalLetters";
    case ErrorCode::SingleStage: return "SingleStage";
    case ErrorCode::MalformedCriticalString: return "MalformedCriticalString";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BadlyParametrized: return "BadlyParametrized";
    case ErrorCode::InvalidPuiseux: return "InvalidPuiseux";
    case ErrorCode::InvalidBranch: return "InvalidBranch";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a code, a
/// human-readable detail naming the violated relation, and (for text input)
/// the 1-based position of the offending character or entry.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(compose(code, detail, position)),
        code_(code),
        detail_(std::move(detail)),
        position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  static std::string compose(ErrorCode code, const std::string& detail,
                             std::optional<std::size_t> position) {
    std::string out{to_string(code)};
    if (!detail.empty()) {
      out += ": ";
      out += detail;
    }
    if (position) {
      out += " (at position " + std::to_string(*position) + ")";
    }
    return out;
  }

  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> position_;
};

}  // namespace goursat

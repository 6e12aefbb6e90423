#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symb {

enum class ErrorKind {
  NonPositiveEntry,
  DimensionMismatch,
  OutOfDomain,
  OutOfInterval,
  NonTermination,
  NotCoprime,
  InvalidK,
  CapTooSmall,
  RatioExceedsOne,
  UnsupportedKind,
  InvalidCohomologyClass,
  NoSignChange,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::OutOfInterval: return "OutOfInterval";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::CapTooSmall: return "CapTooSmall";
    case ErrorKind::RatioExceedsOne: return "RatioExceedsOne";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::InvalidCohomologyClass: return "InvalidCohomologyClass";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is stable and meant for
/// dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Numeric failures (as opposed to bad input).
  bool is_numeric() const noexcept {
    return kind_ == ErrorKind::NonTermination || kind_ == ErrorKind::NoSignChange;
  }

 private:
  ErrorKind kind_;
};

namespace detail {

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) throw Error(kind, what);
}

}  // namespace detail
}  // namespace symb

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stegrle {

/// Every failure the library can report. Names double as the
/// machine-readable tokens printed by the CLI.
enum class ErrorKind {
  InvalidDimensions,
  IoError,
  MalformedHeader,
  MalformedData,
  TruncatedData,
  UnsupportedMaxval,
  RectOutOfBounds,
  InvalidUtf8,
  NonLatinCharacter,
  NulCharacter,
  CapacityExceeded,
  AmbiguousCarrier,
  EmptyMessage,
  BadMagic,
  UnsupportedVersion,
  Truncated,
  LengthMismatch,
  ZeroLengthRun,
  TrailingGarbage,
  DimensionMismatch,
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace stegrle

#include "stegrle/error.hpp"

namespace stegrle {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidDimensions: return "InvalidDimensions";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::MalformedData: return "MalformedData";
    case ErrorKind::TruncatedData: return "TruncatedData";
    case ErrorKind::UnsupportedMaxval: return "UnsupportedMaxval";
    case ErrorKind::RectOutOfBounds: return "RectOutOfBounds";
    case ErrorKind::InvalidUtf8: return "InvalidUtf8";
    case ErrorKind::NonLatinCharacter: return "NonLatinCharacter";
    case ErrorKind::NulCharacter: return "NulCharacter";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::AmbiguousCarrier: return "AmbiguousCarrier";
    case ErrorKind::EmptyMessage: return "EmptyMessage";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorKind::Truncated: return "Truncated";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ZeroLengthRun: return "ZeroLengthRun";
    case ErrorKind::TrailingGarbage: return "TrailingGarbage";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace stegrle

#ifndef DYNDEG_ERROR_HPP
#define DYNDEG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dyndeg {

enum class ErrorCode {
  DimensionTooLarge,
  NoConvergence,
  ShapeMismatch,
  NotSquare,
  InvalidParameters,
  IndexOutOfRange,
  RestrictionNotInvariant,
  SingularBasis,
  ConfigInvalid,
  SchemaError,
  VersionError,
  InconsistentRationalForm,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RestrictionNotInvariant: return "RestrictionNotInvariant";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::VersionError: return "VersionError";
    case ErrorCode::InconsistentRationalForm: return "InconsistentRationalForm";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Schema violation in an instance document; `path` is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(ErrorCode::SchemaError, "at '" + path + "': " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace dyndeg

#endif  // DYNDEG_ERROR_HPP

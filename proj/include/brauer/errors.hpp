#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brauer {

// Distinct failure kinds. The CLI maps each one to its own exit status.
enum class ErrorCode {
  kParse,
  kResourceLimit,
  kNoLift,
  kNotTorsion,
  kNotACocycle,
  kModulusMismatch,
  kSpaceMismatch,
  kCosetTooLarge,
  kInternalConsistency,
  kInvalidArgument,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kNoLift: return "NoLift";
    case ErrorCode::kNotTorsion: return "NotTorsion";
    case ErrorCode::kNotACocycle: return "NotACocycle";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kSpaceMismatch: return "SpaceMismatch";
    case ErrorCode::kCosetTooLarge: return "CosetTooLarge";
    case ErrorCode::kInternalConsistency: return "InternalConsistency";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCode::kParse, what) {}
};
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what) : Error(ErrorCode::kResourceLimit, what) {}
};
class NoLiftError : public Error {
 public:
  explicit NoLiftError(const std::string& what) : Error(ErrorCode::kNoLift, what) {}
};
class NotTorsionError : public Error {
 public:
  explicit NotTorsionError(const std::string& what) : Error(ErrorCode::kNotTorsion, what) {}
};
class NotACocycleError : public Error {
 public:
  explicit NotACocycleError(const std::string& what) : Error(ErrorCode::kNotACocycle, what) {}
};
class ModulusMismatchError : public Error {
 public:
  explicit ModulusMismatchError(const std::string& what)
      : Error(ErrorCode::kModulusMismatch, what) {}
};
class SpaceMismatchError : public Error {
 public:
  explicit SpaceMismatchError(const std::string& what) : Error(ErrorCode::kSpaceMismatch, what) {}
};
class CosetTooLargeError : public Error {
 public:
  explicit CosetTooLargeError(const std::string& what) : Error(ErrorCode::kCosetTooLarge, what) {}
};
class InternalConsistencyError : public Error {
 public:
  explicit InternalConsistencyError(const std::string& what)
      : Error(ErrorCode::kInternalConsistency, what) {}
};
class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

}  // namespace brauer

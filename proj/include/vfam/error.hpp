#pragma once

#include <stdexcept>
#include <string>

namespace vfam {

// Values mirror the VFAM_E_* codes of the C API.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kDimensionMismatch = 2,
  kParse = 3,
  kSchema = 4,
  kCapExceeded = 5,
  kDegenerate = 6,
  kIo = 7,
  kInternal = 8,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vfam

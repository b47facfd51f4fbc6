#pragma once

#include <stdexcept>
#include <string>

namespace trisq {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  out_of_range,
  not_regular,
  degree_mismatch,
  outside_region,
  construction_failed,
  io_error,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// C API maps them one-to-one onto trisq_status values.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace trisq

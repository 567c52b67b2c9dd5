#pragma once

#include <stdexcept>
#include <string>

namespace hypnap {

// Machine-readable failure codes. The CLI maps these to its stderr error
// JSON and exit status, so the strings are part of the external interface.
enum class ErrorCode {
    not_timelike,
    wrong_sheet,
    invalid_isometry,
    degenerate_triangle,
    degenerate_pair,
    degenerate_class,
    unrealizable,
    consistency_failure,
    insufficient_data,
    invalid_input,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* code_str() const noexcept { return to_string(code_); }

  private:
    ErrorCode code_;
};

}  // namespace hypnap

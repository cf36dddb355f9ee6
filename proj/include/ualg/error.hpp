#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ualg {

enum class ErrorCode {
  duplicate_name,
  negative_arity,
  malformed,
  unknown_symbol,
  arity_mismatch,
  unbound_token,
  out_of_range,
  wrong_table_length,
  signature_mismatch,
  unknown_family,
  parameter_out_of_bounds,
  length_mismatch,
  not_constant,
  precondition,
  not_closed,
};

std::string_view to_string(ErrorCode code);

/// Error raised for malformed input or a violated precondition.
/// `line` is 1-based when the error refers to a position in a text input, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace ualg

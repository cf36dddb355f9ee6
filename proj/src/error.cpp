#include "ualg/error.hpp"

namespace ualg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_name: return "duplicate-name";
    case ErrorCode::negative_arity: return "negative-arity";
    case ErrorCode::malformed: return "malformed";
    case ErrorCode::unknown_symbol: return "unknown-symbol";
    case ErrorCode::arity_mismatch: return "arity-mismatch";
    case ErrorCode::unbound_token: return "unbound-token";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::wrong_table_length: return "wrong-table-length";
    case ErrorCode::signature_mismatch: return "signature-mismatch";
    case ErrorCode::unknown_family: return "unknown-family";
    case ErrorCode::parameter_out_of_bounds: return "parameter-out-of-bounds";
    case ErrorCode::length_mismatch: return "length-mismatch";
    case ErrorCode::not_constant: return "not-constant";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::not_closed: return "not-closed";
  }
  return "unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, std::size_t line) {
  std::string out(to_string(code));
  if (line != 0) out += " (line " + std::to_string(line) + ")";
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

}  // namespace ualg

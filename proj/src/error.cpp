#include "cuspcalc/error.hpp"

namespace cuspcalc {

const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_name: return "DuplicateName";
    case errc::dangling_dual: return "DanglingDual";
    case errc::type_dim_mismatch: return "TypeDimMismatch";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::domain_error: return "DomainError";
    case errc::inadmissible_param: return "InadmissibleParam";
    case errc::inconsistent: return "Inconsistent";
    case errc::closure_violation: return "ClosureViolation";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_self_dual_input: return "NotSelfDualInput";
    case errc::unknown_command: return "UnknownCommand";
  }
  return "UnknownError";
}

calc_error::calc_error(errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

int calc_error::exit_code() const noexcept {
  switch (code_) {
    case errc::inadmissible_param:
    case errc::inconsistent:
      return 2;
    default:
      return 1;
  }
}

}  // namespace cuspcalc

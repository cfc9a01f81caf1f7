#pragma once

#include <stdexcept>
#include <string>

namespace cuspcalc {

enum class errc {
  duplicate_name,
  dangling_dual,
  type_dim_mismatch,
  parse_error,
  validation_error,
  domain_error,
  inadmissible_param,
  inconsistent,
  closure_violation,
  dimension_mismatch,
  not_self_dual_input,
  unknown_command,
};

const char* errc_name(errc c);

/// Error carrying a machine-readable kind. Exit-code contract:
/// malformed input maps to 1, mathematically impossible input to 2.
class calc_error : public std::runtime_error {
 public:
  calc_error(errc code, const std::string& msg);
  errc code() const noexcept { return code_; }
  int exit_code() const noexcept;

 private:
  errc code_;
};

}  // namespace cuspcalc

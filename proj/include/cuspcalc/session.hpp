#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cuspcalc/param.hpp"
#include "cuspcalc/reducibility.hpp"
#include "cuspcalc/symbols.hpp"

namespace cuspcalc {

/// Everything a command needs: the symbol table, the loaded parameter in
/// both shapes, the group form, O(2n) flags, and the structural validation
/// report computed at load time.
struct Session {
  SymbolTable table;
  AParam param;
  SpehParam e;  // langlands_quotient image of param
  GroupForm form;
  O2nFlags flags;
  ValidationReport param_report;
};

/// Parses and cross-checks the two input files. Parse failures and symbol
/// table defects throw; structural violations of the parameter are recorded
/// in param_report for commands to act on.
Session load(std::istream& table_in, std::istream& param_in, const GroupForm& form,
             const O2nFlags& flags);

/// Result of one command: deterministic text plus the process exit code
/// (0 success, 1 validation/usage failure, 2 mathematically impossible
/// input).
struct CommandResult {
  std::string text;
  int exit_code = 0;
};

/// Dispatches one command against the session. Commands that consume the
/// parameter refuse to run (exit 1) when param_report has violations; only
/// `check` and `reconstruct` run regardless. Unknown names throw
/// UnknownCommand; calc_errors raised by the math are rendered into the
/// result with their exit code.
CommandResult run(Session& session, const std::string& command,
                  const std::optional<std::string>& rho, const std::optional<Rational>& x,
                  const std::optional<std::string>& style,
                  const std::vector<std::string>& rest);

}  // namespace cuspcalc

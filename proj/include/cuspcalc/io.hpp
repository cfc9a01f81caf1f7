#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cuspcalc/param.hpp"
#include "cuspcalc/symbols.hpp"

namespace cuspcalc {

/// Parses the symbol-table text format, one symbol per line:
///   symbol <name> dim=<int> type=<symplectic|orthogonal|none> dual=<name>
/// `#` starts a comment; blank lines are skipped. Unknown or out-of-order
/// keys are ParseErrors with line and column. The parsed batch is not yet
/// registered; feed it to SymbolTable::register_symbols.
std::vector<CuspidalSymbol> parse_symbol_lines(std::istream& in);

/// Parses the parameter text format, one block per line:
///   block sigma=<name> bprime=<int> b=<int> x=<rational>
///   sblock sigma=<name> a=<int> x=<rational>
/// sblock lines are shorthand for bprime=1. Block names must exist in the
/// table (ParseError otherwise); block invariants (positive sizes, twist in
/// the open interval) surface as ValidationErrors from the block factories.
AParam parse_param_lines(std::istream& in, const SymbolTable& table);

/// Canonical one-line forms, lowest-terms rationals.
std::string format_block(const ABlock& blk);
std::string format_sblock(const SpehBlock& blk);

/// Canonical multi-line forms: one line per block repeated by multiplicity,
/// lines sorted lexicographically.
std::string format_param(const AParam& p);
std::string format_param(const SpehParam& e);

}  // namespace cuspcalc

#include "cuspcalc/symbols.hpp"

namespace cuspcalc {

const char* to_string(SelfDualType t) {
  switch (t) {
    case SelfDualType::Symplectic: return "symplectic";
    case SelfDualType::Orthogonal: return "orthogonal";
    case SelfDualType::NotSelfDual: return "none";
  }
  return "?";
}

const char* to_string(FormType t) {
  return t == FormType::Symplectic ? "symplectic" : "orthogonal";
}

const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::Sp: return "sp";
    case GroupKind::SOodd: return "so-odd";
    case GroupKind::Oeven: return "o-even";
  }
  return "?";
}

const char* to_string(RKind r) { return r == RKind::Sym2 ? "Sym2" : "wedge2"; }

const CuspidalSymbol& SymbolTable::at(const std::string& name) const {
  auto it = symbols_.find(name);
  if (it == symbols_.end())
    throw calc_error(errc::validation_error, "unknown symbol '" + name + "'");
  return it->second;
}

void SymbolTable::register_symbols(const std::vector<CuspidalSymbol>& batch) {
  // Validate the batch against the current table before mutating anything.
  std::map<std::string, CuspidalSymbol> staged = symbols_;
  for (const auto& sym : batch) {
    if (sym.name.empty())
      throw calc_error(errc::parse_error, "empty symbol name");
    if (sym.dim <= 0)
      throw calc_error(errc::validation_error,
                       "symbol '" + sym.name + "' must have positive dim");
    if (staged.count(sym.name))
      throw calc_error(errc::duplicate_name, "symbol '" + sym.name + "'");
    if (sym.sd_type != SelfDualType::NotSelfDual && sym.dual != sym.name)
      throw calc_error(errc::validation_error,
                       "self-dual symbol '" + sym.name + "' must be its own dual");
    if (sym.sd_type == SelfDualType::Symplectic && sym.dim % 2 != 0)
      throw calc_error(errc::type_dim_mismatch,
                       "symplectic symbol '" + sym.name + "' has odd dim");
    staged.emplace(sym.name, sym);
  }
  // Duality closure over the staged table.
  for (const auto& sym : batch) {
    auto it = staged.find(sym.dual);
    if (it == staged.end())
      throw calc_error(errc::dangling_dual,
                       "symbol '" + sym.name + "' references missing dual '" +
                           sym.dual + "'");
    const CuspidalSymbol& d = it->second;
    if (d.dual != sym.name)
      throw calc_error(errc::dangling_dual,
                       "dual of '" + sym.name + "' does not point back");
    if (d.dim != sym.dim)
      throw calc_error(errc::validation_error,
                       "dual pair '" + sym.name + "'/'" + sym.dual +
                           "' has mismatched dims");
    if (sym.dual != sym.name && (sym.sd_type != SelfDualType::NotSelfDual ||
                                 d.sd_type != SelfDualType::NotSelfDual))
      throw calc_error(errc::validation_error,
                       "dual pair '" + sym.name + "'/'" + sym.dual +
                           "' must both be of type none");
  }
  symbols_ = std::move(staged);
}

GroupData group_data(const GroupForm& form) {
  if (form.n < 0) throw calc_error(errc::domain_error, "negative rank");
  GroupData d;
  d.epsilon = form.kind == GroupKind::Sp ? 1 : 0;
  d.lg_dim = 2 * form.n + d.epsilon;
  d.lg_type = form.kind == GroupKind::SOodd ? FormType::Symplectic : FormType::Orthogonal;
  d.r_kind = d.lg_type == FormType::Symplectic ? RKind::Sym2 : RKind::Wedge2;
  return d;
}

}  // namespace cuspcalc

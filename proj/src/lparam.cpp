#include "cuspcalc/lparam.hpp"

#include <algorithm>
#include <tuple>

#include "cuspcalc/error.hpp"

namespace cuspcalc {

FormType block_pairing_type(SelfDualType sd, long long a) {
  if (sd == SelfDualType::NotSelfDual) {
    throw calc_error(errc::not_self_dual_input,
                     "pairing type is defined only for self-dual symbols");
  }
  const FormType symbol_type =
      sd == SelfDualType::Symplectic ? FormType::Symplectic : FormType::Orthogonal;
  const FormType sl2_type = a % 2 == 0 ? FormType::Symplectic : FormType::Orthogonal;
  return symbol_type == sl2_type ? FormType::Orthogonal : FormType::Symplectic;
}

FormalParameter build_parameter(const SpehParam& e, const SymbolTable& table,
                                const GroupForm& form) {
  const ValidationReport report = validate_param(e, table, form);
  if (!report.ok()) {
    std::string joined;
    bool dimension_only = true;
    for (const std::string& v : report.violations) {
      if (v.rfind("dimension", 0) != 0) dimension_only = false;
      if (!joined.empty()) joined += "; ";
      joined += v;
    }
    throw calc_error(dimension_only ? errc::dimension_mismatch : errc::closure_violation,
                     joined);
  }

  FormalParameter out;
  out.form = form;
  for (const auto& [blk, mult] : e.blocks) {
    const CuspidalSymbol& sym = table.at(blk.sigma);
    if (blk.x == Rational(0) && sym.sd_type != SelfDualType::NotSelfDual) {
      const FormType type = block_pairing_type(sym.sd_type, blk.a);
      const PairingKind kind = type == FormType::Symplectic
                                   ? PairingKind::SelfPairedSymplectic
                                   : PairingKind::SelfPairedOrthogonal;
      for (long long i = 0; i < mult; ++i) {
        out.blocks.push_back({blk.sigma, blk.a, blk.x, kind, 0});
      }
      continue;
    }
    // Isotropic pair with (dual sigma, a, -x); emit both halves when visiting
    // the lexicographically smaller member so each pair appears once.
    const SpehBlock partner{table.dual_of(blk.sigma), blk.a, -blk.x};
    const auto key = std::tie(blk.sigma, blk.a, blk.x);
    const auto partner_key = std::tie(partner.sigma, partner.a, partner.x);
    if (partner_key < key) continue;
    for (long long i = 0; i < mult; ++i) {
      const std::size_t first = out.blocks.size();
      out.blocks.push_back({blk.sigma, blk.a, blk.x, PairingKind::IsotropicPartner, first + 1});
      out.blocks.push_back(
          {partner.sigma, partner.a, partner.x, PairingKind::IsotropicPartner, first});
    }
  }
  return out;
}

ValidationReport factors_through_LG(const FormalParameter& p) {
  ValidationReport report;
  const FormType want = group_data(p.form).lg_type;
  for (const FormalBlock& blk : p.blocks) {
    if (blk.pairing == PairingKind::IsotropicPartner) continue;
    const FormType got = blk.pairing == PairingKind::SelfPairedSymplectic
                             ? FormType::Symplectic
                             : FormType::Orthogonal;
    if (got != want) {
      report.violations.push_back(
          "block (" + blk.sigma + ", a=" + std::to_string(blk.a) +
          ") carries a " + std::string(to_string(got)) + " form but the ambient type is " +
          std::string(to_string(want)));
    }
  }
  return report;
}

bool is_elliptic(const SpehParam& e) {
  return std::all_of(e.blocks.begin(), e.blocks.end(),
                     [](const auto& entry) { return entry.first.x == Rational(0); });
}

}  // namespace cuspcalc

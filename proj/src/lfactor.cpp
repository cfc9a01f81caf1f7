#include "cuspcalc/lfactor.hpp"

#include <set>

namespace cuspcalc {

namespace {
const Rational kHalf(1, 2);
}

int ord_pair(const SymbolTable& table, const std::string& rho, const std::string& sigma,
             const Rational& u, const Rational& s0) {
  table.at(rho);
  table.at(sigma);
  if (sigma == table.dual_of(rho) && s0 == -u) return -1;
  return 0;
}

int ord_L_speh(const SymbolTable& table, const std::string& rho, const SpehParam& e,
               const Rational& s0) {
  int ord = 0;
  const std::string& dual = table.dual_of(rho);
  for (const auto& [blk, mult] : e.blocks) {
    if (blk.sigma != dual) continue;
    // -s0 lies on the ladder x + (a-1)/2 - k, 0 <= k < a, iff it sits in
    // [x - (a-1)/2, x + (a-1)/2] and differs from the top by an integer.
    Rational top = blk.x + Rational(blk.a - 1, 2);
    Rational bot = blk.x - Rational(blk.a - 1, 2);
    Rational t = -s0;
    if (!(t < bot) && !(top < t) && (top - t).is_integer())
      ord -= static_cast<int>(mult);
  }
  return ord;
}

int ord_L_steinberg(const SymbolTable& table, const std::string& rho,
                    const Multiset<SteinbergBlock>& l, const Rational& s0) {
  int ord = 0;
  for (const auto& [blk, mult] : l)
    ord += static_cast<int>(mult) *
           ord_pair(table, rho, blk.sigma, blk.x + Rational(blk.a - 1, 2), s0);
  return ord;
}

int eps_prime(const SymbolTable& table, const std::string& rho, const GroupForm& form) {
  const CuspidalSymbol& sym = table.at(rho);
  if (sym.sd_type == SelfDualType::NotSelfDual) return 0;
  FormType own = sym.sd_type == SelfDualType::Symplectic ? FormType::Symplectic
                                                         : FormType::Orthogonal;
  return own != group_data(form).lg_type ? 1 : 0;
}

int ord_r_ratio(const SymbolTable& table, const std::string& rho, const GroupForm& form,
                const Rational& s0) {
  int eps = eps_prime(table, rho, form);
  int ord = 0;
  if (s0 == Rational(0)) ord += eps;
  if (s0 == -kHalf) ord -= eps;
  return ord;
}

int ord_rA(const SymbolTable& table, const std::string& rho, const SpehParam& e,
           const GroupForm& form, const Rational& s0) {
  return ord_L_speh(table, rho, e, s0) - ord_L_speh(table, rho, e, s0 + Rational(1)) -
         ord_r_ratio(table, rho, form, s0);
}

int ord_rL(const SymbolTable& table, const std::string& rho, const SpehParam& e,
           const GroupForm& form, const Rational& s0) {
  Multiset<SteinbergBlock> l = l_parameter(e);
  return ord_L_steinberg(table, rho, l, s0) -
         ord_L_steinberg(table, rho, l, s0 + Rational(1)) -
         ord_r_ratio(table, rho, form, s0);
}

int ord_r(NormStyle style, const SymbolTable& table, const std::string& rho,
          const SpehParam& e, const GroupForm& form, const Rational& s0) {
  return style == NormStyle::Arthur ? ord_rA(table, rho, e, form, s0)
                                    : ord_rL(table, rho, e, form, s0);
}

int product_order(NormStyle style, const SymbolTable& table, const std::string& rho,
                  const SpehParam& e, const GroupForm& form, const Rational& s0) {
  // Order at s0 of s -> r(dual rho x pi, -s) equals the order of
  // r(dual rho x pi, .) at -s0.
  return ord_r(style, table, rho, e, form, s0) +
         ord_r(style, table, table.dual_of(rho), e, form, -s0);
}

OrderLedger zero_pole_locus(NormStyle style, const SymbolTable& table,
                            const std::string& rho, const SpehParam& e,
                            const GroupForm& form) {
  // Candidate points: the assemblies can only change order where one of their
  // four factors does, i.e. at -u and -u-1 for a ladder/top exponent u, and
  // at the two ratio points 0 and -1/2.
  std::set<Rational> cands{Rational(0), -kHalf};
  for (const auto& [blk, mult] : e.blocks) {
    (void)mult;
    Rational top = blk.x + Rational(blk.a - 1, 2);
    Rational bot = blk.x - Rational(blk.a - 1, 2);
    for (Rational u = bot; !(top < u); u = u + Rational(1)) {
      cands.insert(-u);
      cands.insert(-u - Rational(1));
    }
  }
  OrderLedger ledger;
  for (const Rational& s0 : cands) {
    if (s0 < Rational(0)) continue;
    ledger.set(s0, ord_r(style, table, rho, e, form, s0));
  }
  return ledger;
}

}  // namespace cuspcalc

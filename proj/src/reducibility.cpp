#include "cuspcalc/reducibility.hpp"

#include <algorithm>

#include "cuspcalc/error.hpp"

namespace cuspcalc {

namespace {

const Rational kHalf{1, 2};

// Signed count sum_x (n1 - n0) at s0, taken over the rho-blocks of e with
// no domain restriction: +1 per block with x + (a+1)/2 = s0, -1 per block
// with x + (a-1)/2 = s0, weighted by multiplicity.
long long signed_count(const SpehParam& e, const std::string& rho, const Rational& s0) {
  long long total = 0;
  for (const auto& [blk, mult] : e.blocks) {
    if (blk.sigma != rho) continue;
    const Rational top = blk.x + Rational(blk.a - 1, 2);
    if (top + 1 == s0) total += mult;
    if (top == s0) total -= mult;
  }
  return total;
}

// All points where the signed count can be nonzero: x + (a+1)/2 and
// x + (a-1)/2 over the rho-blocks of e.
std::set<Rational> candidate_points(const SpehParam& e, const std::string& rho) {
  std::set<Rational> out;
  for (const auto& [blk, mult] : e.blocks) {
    if (blk.sigma != rho) continue;
    const Rational top = blk.x + Rational(blk.a - 1, 2);
    out.insert(top);
    out.insert(top + 1);
  }
  return out;
}

void check_admissible_at(const SpehParam& e, const std::string& rho, const Rational& s0) {
  const long long sc = signed_count(e, rho, s0);
  if (sc < 0 || sc > 1) {
    throw calc_error(errc::inadmissible_param,
                     "signed count " + std::to_string(sc) + " at s0=" + s0.str() +
                         " for symbol '" + rho + "' lies outside {0,1}");
  }
}

// The unique half-integer reducibility point (a_rho + 1)/2, when a_rho is
// finite or -1; none when a_rho is infinite.
std::optional<Rational> half_integer_red_point(const SpehParam& e, const std::string& rho,
                                               const SymbolTable& table,
                                               const GroupForm& form) {
  const ExtNat a = a_rho(e, rho, table, form);
  switch (a.kind) {
    case ExtNat::Kind::MinusOne:
      return Rational(0);
    case ExtNat::Kind::Finite:
      return Rational(a.value + 1, 2);
    case ExtNat::Kind::Infinity:
      return std::nullopt;
  }
  return std::nullopt;
}

bool oeven_reducible_restriction_branch(const std::string& rho, const SymbolTable& table,
                                        const GroupForm& form, const O2nFlags& flags) {
  return form.kind == GroupKind::Oeven && !flags.so_restriction_irreducible &&
         table.at(rho).dim % 2 != 0;
}

bool is_self_dual(const std::string& rho, const SymbolTable& table) {
  return table.at(rho).sd_type != SelfDualType::NotSelfDual;
}

}  // namespace

Multiset<long long> jord(const SpehParam& e, const std::string& rho, const Rational& x) {
  Multiset<long long> out;
  for (const auto& [blk, mult] : e.blocks) {
    if (blk.sigma == rho && blk.x == x) ms_add(out, blk.a, mult);
  }
  return out;
}

ExtNat a_rho(const SpehParam& e, const std::string& rho, const SymbolTable& table,
             const GroupForm& form) {
  const Multiset<long long> j = jord(e, rho, Rational(0));
  if (!j.empty()) return ExtNat::finite(j.rbegin()->first);
  const SelfDualType sd = table.at(rho).sd_type;
  if (sd == SelfDualType::NotSelfDual) return ExtNat::infinity();
  const FormType sd_form =
      sd == SelfDualType::Symplectic ? FormType::Symplectic : FormType::Orthogonal;
  if (sd_form == group_data(form).lg_type) return ExtNat::minus_one();
  return ExtNat::finite(0);
}

long long n0(const SpehParam& e, const std::string& rho, const Rational& s0,
             const Rational& x) {
  long long count = 0;
  for (const auto& [a, mult] : jord(e, rho, x)) {
    if (x + Rational(a - 1, 2) == s0) count += mult;
  }
  return count;
}

long long n1(const SpehParam& e, const std::string& rho, const Rational& s0,
             const Rational& x, const SymbolTable& table, const GroupForm& form) {
  if (s0 == kHalf && x == Rational(0)) return eps_prime(table, rho, form) ? 1 : 0;
  if (s0 <= kHalf) {
    throw calc_error(errc::domain_error,
                     "n1 is defined for s0 > 1/2 (plus s0 = 1/2 at x = 0); got s0=" +
                         s0.str() + ", x=" + x.str());
  }
  long long count = 0;
  for (const auto& [a, mult] : jord(e, rho, x)) {
    if (x + Rational(a + 1, 2) == s0) count += mult;
  }
  return count;
}

int irr_at(const SpehParam& e, const std::string& rho, const SymbolTable& table,
           const GroupForm& form, const Rational& s0, const O2nFlags& flags) {
  if (s0 < Rational(0)) {
    throw calc_error(errc::domain_error, "irr_at requires s0 >= 0; got " + s0.str());
  }
  if (oeven_reducible_restriction_branch(rho, table, form, flags)) {
    return (s0 == Rational(0) && is_self_dual(rho, table)) ? 1 : 0;
  }
  if (s0 > kHalf) check_admissible_at(e, rho, s0);
  if (s0.is_half_integer()) {
    const std::optional<Rational> hp = half_integer_red_point(e, rho, table, form);
    return (hp && *hp == s0) ? 1 : 0;
  }
  if (s0 > kHalf) return signed_count(e, rho, s0) == 1 ? 1 : 0;
  return 0;  // non-half-integer points in ]0,1/2[ never reduce
}

std::set<Rational> red_points(const SpehParam& e, const std::string& rho,
                              const SymbolTable& table, const GroupForm& form,
                              const O2nFlags& flags) {
  std::set<Rational> out;
  if (oeven_reducible_restriction_branch(rho, table, form, flags)) {
    if (is_self_dual(rho, table)) out.insert(Rational(0));
    return out;
  }
  const std::set<Rational> candidates = candidate_points(e, rho);
  for (const Rational& s0 : candidates) {
    if (s0 > kHalf) check_admissible_at(e, rho, s0);
  }
  if (const std::optional<Rational> hp = half_integer_red_point(e, rho, table, form)) {
    out.insert(*hp);
  }
  for (const Rational& s0 : candidates) {
    if (s0 > kHalf && !s0.is_half_integer() && signed_count(e, rho, s0) == 1) {
      out.insert(s0);
    }
  }
  return out;
}

ValidationReport validate_jord(const SpehParam& e, const std::string& rho,
                               const SymbolTable& table, const GroupForm& form) {
  ValidationReport report;
  const Multiset<long long> j = jord(e, rho, Rational(0));
  if (j.empty()) return report;
  if (!is_self_dual(rho, table)) {
    report.violations.push_back("symbol '" + rho +
                                "' is not self-dual but has blocks at x = 0");
  }
  const bool want_even = eps_prime(table, rho, form);
  for (const auto& [a, mult] : j) {
    if (mult > 1) {
      report.violations.push_back("multiplicity: a=" + std::to_string(a) + " appears " +
                                  std::to_string(mult) + " times in Jord at x = 0");
    }
    if (a > 2 && !j.count(a - 2)) {
      report.violations.push_back("gap: a=" + std::to_string(a) + " present but a=" +
                                  std::to_string(a - 2) + " missing in Jord at x = 0");
    }
    if (is_self_dual(rho, table) && (a % 2 == 0) != want_even) {
      report.violations.push_back(
          "parity: a=" + std::to_string(a) + " should be " +
          std::string(want_even ? "even" : "odd") + " for symbol '" + rho + "'");
    }
  }
  return report;
}

ValidationReport consistency_check(const SpehParam& e, const std::string& rho,
                                   const SymbolTable& table, const GroupForm& form,
                                   const O2nFlags& flags) {
  ValidationReport report;
  const auto note = [&report](std::string msg) {
    report.violations.push_back(std::move(msg));
  };
  try {
    // Identity at s0 = 0: n0(0) + irr(0) + eps' equals 1 for self-dual rho
    // and 0 otherwise. Only x = 0 blocks can hit s0 = 0.
    {
      const long long lhs = n0(e, rho, Rational(0), Rational(0)) +
                            irr_at(e, rho, table, form, Rational(0), flags) +
                            (eps_prime(table, rho, form) ? 1 : 0);
      const long long rhs = is_self_dual(rho, table) ? 1 : 0;
      if (lhs != rhs) {
        note("at s0=0: n0 + irr + eps' = " + std::to_string(lhs) + ", expected " +
             std::to_string(rhs));
      }
    }
    // Identity at s0 = 1/2: n0(1/2) = n1(1/2) - irr(1/2) with n1(1/2) = eps'.
    // Only x = 0 blocks can hit s0 = 1/2.
    {
      const long long lhs = n0(e, rho, kHalf, Rational(0));
      const long long rhs = n1(e, rho, kHalf, Rational(0), table, form) -
                            irr_at(e, rho, table, form, kHalf, flags);
      if (lhs != rhs) {
        note("at s0=1/2: n0 = " + std::to_string(lhs) + ", expected n1 - irr = " +
             std::to_string(rhs));
      }
    }
    // Identity on s0 > 1/2: sum_x (n1 - n0) = irr(s0) at every candidate.
    const std::set<Rational> candidates = candidate_points(e, rho);
    for (const Rational& s0 : candidates) {
      if (!(s0 > kHalf)) continue;
      const long long sc = signed_count(e, rho, s0);
      const int irr = irr_at(e, rho, table, form, s0, flags);
      if (sc != irr) {
        note("at s0=" + s0.str() + ": sum_x (n1 - n0) = " + std::to_string(sc) +
             ", but irr = " + std::to_string(irr));
      }
    }
    // Telescoping identity, applicable when every rho-block sits at x = 0:
    // sum_{k >= 0} irr(s0 + k) = n1(s0) for half-integer s0 >= 1/2.
    bool all_untwisted = true;
    Rational max_candidate(0);
    for (const auto& [blk, mult] : e.blocks) {
      if (blk.sigma != rho) continue;
      if (blk.x != Rational(0)) all_untwisted = false;
    }
    for (const Rational& s0 : candidates) max_candidate = std::max(max_candidate, s0);
    if (all_untwisted) {
      std::set<Rational> starts = candidates;
      starts.insert(kHalf);
      for (const Rational& s0 : starts) {
        if (s0 < kHalf || !s0.is_half_integer()) continue;
        const long long lhs = n1(e, rho, s0, Rational(0), table, form);
        long long sum = 0;
        for (Rational t = s0; t <= max_candidate + 1; t = t + 1) {
          sum += irr_at(e, rho, table, form, t, flags);
        }
        if (lhs != sum) {
          note("at s0=" + s0.str() + ": n1 = " + std::to_string(lhs) +
               ", but sum_k irr(s0+k) = " + std::to_string(sum));
        }
      }
    }
  } catch (const calc_error& err) {
    if (err.code() != errc::inadmissible_param) throw;
    report.inadmissible = true;
    note(err.what());
  }
  return report;
}

}  // namespace cuspcalc

#pragma once

#include <optional>
#include <set>
#include <string>

#include "cuspcalc/lfactor.hpp"
#include "cuspcalc/param.hpp"

namespace cuspcalc {

/// Extended natural number recording the largest Jordan block size at x = 0:
/// a finite value (0 allowed), -1, or +infinity. The attached reducibility
/// point is (value+1)/2 in the non-infinite cases.
struct ExtNat {
  enum class Kind { MinusOne, Finite, Infinity };
  Kind kind = Kind::Infinity;
  long long value = 0;  // meaningful only when kind == Finite

  static ExtNat minus_one() { return {Kind::MinusOne, 0}; }
  static ExtNat finite(long long v) { return {Kind::Finite, v}; }
  static ExtNat infinity() { return {Kind::Infinity, 0}; }

  bool is_infinite() const { return kind == Kind::Infinity; }

  friend bool operator==(const ExtNat&, const ExtNat&) = default;
};

/// Behaviour switch for the even orthogonal form: whether the restriction of
/// the inducing datum to the special subgroup stays irreducible (the default).
struct O2nFlags {
  bool so_restriction_irreducible = true;
};

/// Jordan multiset at a fixed twist: {a : (rho, a, x) in e} with multiplicity.
Multiset<long long> jord(const SpehParam& e, const std::string& rho, const Rational& x);

/// Largest block at x = 0 when present; otherwise -1 / 0 / infinity according
/// to whether rho is self-dual of the dual-group type, self-dual of the
/// opposite type, or not self-dual.
ExtNat a_rho(const SpehParam& e, const std::string& rho, const SymbolTable& table,
             const GroupForm& form);

/// n0 = #{a in Jord_{rho,x} : s0 = x + (a-1)/2}.
long long n0(const SpehParam& e, const std::string& rho, const Rational& s0,
             const Rational& x);

/// n1 = #{a in Jord_{rho,x} : s0 = x + (a+1)/2}; defined for s0 > 1/2, with
/// the single extension n1(1/2, x=0) = eps_prime. Anything else is a domain
/// error: the restriction is enforced, not extended.
long long n1(const SpehParam& e, const std::string& rho, const Rational& s0,
             const Rational& x, const SymbolTable& table, const GroupForm& form);

/// Indicator that s0 >= 0 is a reducibility point of the induced family
/// attached to (rho, e). Half-integer points follow the closed rule from
/// a_rho; other points s0 > 1/2 follow the signed count sum_x (n1 - n0).
/// Throws InadmissibleParam when that signed count leaves {0,1} at the
/// queried point.
int irr_at(const SpehParam& e, const std::string& rho, const SymbolTable& table,
           const GroupForm& form, const Rational& s0, const O2nFlags& flags);

/// Full reducibility set on s0 >= 0: the half-integer point from a_rho plus
/// all non-half-integer s0 > 1/2 with signed count 1. Scans the finite
/// candidate set and throws InadmissibleParam if the signed count leaves
/// {0,1} anywhere on s0 > 1/2. For the even orthogonal form with an odd
/// dimensional symbol and reducible restriction the set is {0} for self-dual
/// rho and empty otherwise.
std::set<Rational> red_points(const SpehParam& e, const std::string& rho,
                              const SymbolTable& table, const GroupForm& form,
                              const O2nFlags& flags);

/// Checks the shape of Jord_{rho,0}: multiplicity-free, no gap (a-2 present
/// whenever a > 2 is), and parity (all odd when rho has the dual-group type,
/// all even when it has the opposite type; nonempty requires self-duality).
ValidationReport validate_jord(const SpehParam& e, const std::string& rho,
                               const SymbolTable& table, const GroupForm& form);

/// Verifies the displayed counting identities on the finite candidate set:
///   n0(s0) = n1(s0) - irr(s0) for s0 > 0 (the signed-count form for s0>1/2),
///   n0(0) + irr(0) + eps_prime = 1 for self-dual rho and 0 otherwise, and
///   the telescoping identity sum_k irr(s0+k) = n1(s0) when all twists are 0.
/// Violations are reported as data; an InadmissibleParam raised while
/// evaluating the derived quantities is reported, not propagated.
ValidationReport consistency_check(const SpehParam& e, const std::string& rho,
                                   const SymbolTable& table, const GroupForm& form,
                                   const O2nFlags& flags);

}  // namespace cuspcalc

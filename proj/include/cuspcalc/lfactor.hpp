#pragma once

#include <map>
#include <string>

#include "cuspcalc/param.hpp"
#include "cuspcalc/rational.hpp"
#include "cuspcalc/symbols.hpp"

namespace cuspcalc {

/// Finite map s0 -> nonzero vanishing order on the real axis.
/// Negative order = pole, positive = zero; absent points have order 0.
struct OrderLedger {
  std::map<Rational, int> entries;

  int at(const Rational& s0) const {
    auto it = entries.find(s0);
    return it == entries.end() ? 0 : it->second;
  }
  void set(const Rational& s0, int ord) {
    if (ord == 0)
      entries.erase(s0);
    else
      entries[s0] = ord;
  }
};

/// Which normalization factor a computation refers to: the Arthur-style one
/// built on the Speh reading of the parameter, or the Langlands-style one
/// built on its Steinberg reading.
enum class NormStyle { Arthur, Langlands };

/// Twist convention used throughout: L(rho x Pi |.|^x, s) = L(rho x Pi, s+x).
/// For a cuspidal pair the factor L(rho x sigma|.|^u, s) has a simple pole at
/// s0 = -u exactly when sigma is the dual of rho, and no other real zero or
/// pole; ord_pair returns its order at s0.
int ord_pair(const SymbolTable& table, const std::string& rho, const std::string& sigma,
             const Rational& u, const Rational& s0);

/// Order at s0 of L(rho x pi, s) where pi is the Speh-reading product of e:
/// one cuspidal factor per element of the full exponent ladder of each block.
int ord_L_speh(const SymbolTable& table, const std::string& rho, const SpehParam& e,
               const Rational& s0);

/// Order at s0 of L(rho x pi, s) where pi is the Steinberg-reading product:
/// a single cuspidal factor per block, at the top exponent x + (a-1)/2.
int ord_L_steinberg(const SymbolTable& table, const std::string& rho,
                    const Multiset<SteinbergBlock>& l, const Rational& s0);

/// 1 when rho is self-dual of type opposite to the dual-group type (i.e. the
/// Sym^2/wedge^2 factor L(rho, r, s) has a simple pole at s = 0), else 0.
int eps_prime(const SymbolTable& table, const std::string& rho, const GroupForm& form);

/// Order at s0 of L(rho,r,2s)^{-1} L(rho,r,2s+1):
/// eps_prime * ([s0 == 0] - [s0 == -1/2]).
/// The sign placement at -1/2 is isolated here on purpose; no caller encodes it.
int ord_r_ratio(const SymbolTable& table, const std::string& rho, const GroupForm& form,
                const Rational& s0);

/// Order at s0 of the Arthur-style normalization factor
///   L(rho x pi^A, s) L(rho,r,2s) / (L(rho x pi^A, s+1) L(rho,r,2s+1)).
int ord_rA(const SymbolTable& table, const std::string& rho, const SpehParam& e,
           const GroupForm& form, const Rational& s0);

/// Same assembly with the Steinberg reading of e in place of the Speh one.
int ord_rL(const SymbolTable& table, const std::string& rho, const SpehParam& e,
           const GroupForm& form, const Rational& s0);

int ord_r(NormStyle style, const SymbolTable& table, const std::string& rho,
          const SpehParam& e, const GroupForm& form, const Rational& s0);

/// Order at s0 of r(rho x pi, s) * r(dual rho x pi, -s); the reflected factor
/// is evaluated by substituting the dual symbol and -s0 into the assembly.
int product_order(NormStyle style, const SymbolTable& table, const std::string& rho,
                  const SpehParam& e, const GroupForm& form, const Rational& s0);

/// All points s0 >= 0 where the chosen factor has nonzero order, found by
/// scanning the finite candidate set of linear-in-exponent points (never by
/// numeric root finding).
OrderLedger zero_pole_locus(NormStyle style, const SymbolTable& table,
                            const std::string& rho, const SpehParam& e,
                            const GroupForm& form);

}  // namespace cuspcalc

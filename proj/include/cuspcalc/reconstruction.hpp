#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cuspcalc/multiset.hpp"
#include "cuspcalc/param.hpp"
#include "cuspcalc/rational.hpp"

namespace cuspcalc {

/// Multiplicity-free set of positive non-half-integer rationals: the
/// non-half-integer reducibility points attached to one symbol.
using RedSet = std::set<Rational>;

/// Positive-exponent Jordan data: multiset of (x, a) with 0 < x < 1/2 and
/// a >= 1.
using EPrime = Multiset<std::pair<Rational, long long>>;

/// Validates raw values into a RedSet. Each value must be positive and not a
/// half-integer (ValidationError otherwise); duplicates are rejected as
/// InadmissibleParam, mirroring the multiplicity bound of red_multiset.
RedSet make_red_set(const std::vector<Rational>& values);

/// The signed difference {x+(a+1)/2} minus {x+(a-1)/2} over the twisted
/// (x != 0) rho-blocks of e, restricted to values > 1/2. Values <= 1/2 are
/// outside the identity's range and are dropped, not counted. Throws
/// InadmissibleParam if any kept multiplicity is negative or exceeds 1.
RedSet red_multiset(const SpehParam& e, const std::string& rho);

/// Recovers the positive-exponent Jordan couples from a RedSet by descending
/// recursion over the candidate keys y = x + (a+1)/2: at each key, the count
/// implied by E and the already-determined couples (extended to negative
/// exponents by the x -> -x symmetry) either matches known contributors or
/// forces a new couple (x_y, 2(y - x_y) - 1). Throws Inconsistent when the
/// bookkeeping forces a negative remainder or a couple with a < 1.
EPrime reconstruct(const RedSet& E);

/// True when reconstruct(red_multiset(e, rho)) returns exactly the (x, a)
/// multiset of the rho-blocks of e with x > 0. Propagates errors from the
/// two underlying computations.
bool roundtrip_check(const SpehParam& e, const std::string& rho);

}  // namespace cuspcalc

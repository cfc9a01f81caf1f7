#include "cuspcalc/reconstruction.hpp"

#include <cassert>

#include "cuspcalc/error.hpp"

namespace cuspcalc {

namespace {

const Rational kHalf{1, 2};

}  // namespace

RedSet make_red_set(const std::vector<Rational>& values) {
  RedSet out;
  for (const Rational& v : values) {
    if (v <= Rational(0)) {
      throw calc_error(errc::validation_error,
                       "reducibility points must be positive; got " + v.str());
    }
    if (v.is_half_integer()) {
      throw calc_error(errc::validation_error,
                       "reducibility points must not be half-integers; got " + v.str());
    }
    if (!out.insert(v).second) {
      throw calc_error(errc::inadmissible_param,
                       "reducibility point " + v.str() + " appears more than once");
    }
  }
  return out;
}

RedSet red_multiset(const SpehParam& e, const std::string& rho) {
  Multiset<Rational> signed_points;
  for (const auto& [blk, mult] : e.blocks) {
    if (blk.sigma != rho || blk.x == Rational(0)) continue;
    const Rational top = blk.x + Rational(blk.a - 1, 2);
    if (top + 1 > kHalf) ms_add(signed_points, top + 1, mult);
    if (top > kHalf) ms_add(signed_points, top, -mult);
  }
  RedSet out;
  for (const auto& [point, mult] : signed_points) {
    if (mult < 0 || mult > 1) {
      throw calc_error(errc::inadmissible_param,
                       "reducibility multiset has multiplicity " + std::to_string(mult) +
                           " at " + point.str() + " for symbol '" + rho + "'");
    }
    if (mult == 1) out.insert(point);
  }
  return out;
}

EPrime reconstruct(const RedSet& E) {
  EPrime determined;
  if (E.empty()) return determined;

  // Keys live in the residue classes of E modulo 1/2 together with their
  // mirror classes 1/2 - r: determined couples at exponent x feed the
  // bookkeeping at keys congruent to both x and -x.
  std::set<Rational> residues;
  for (const Rational& y : E) {
    const Rational r = y.mod_half();
    residues.insert(r);
    residues.insert(kHalf - r);
  }
  const Rational max_key = *E.rbegin();
  std::set<Rational> keys;
  for (const Rational& r : residues) {
    for (Rational q = r; q <= max_key; q = q + kHalf) {
      if (q > kHalf) keys.insert(q);
    }
  }

  for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
    const Rational y = *it;
    const Rational x_y = y.mod_half();
    assert(Rational(0) < x_y && x_y < kHalf);

    // m_minus: determined couples, extended to negative exponents by the
    // x -> -x symmetry, whose lower edge x' + (a'-1)/2 lands on y.
    long long m_minus = 0;
    for (const auto& [couple, mult] : determined) {
      const auto& [xp, ap] = couple;
      assert(xp + Rational(ap + 1, 2) > y);  // only larger keys are determined
      if (xp + Rational(ap - 1, 2) == y) m_minus += mult;
      if (-xp + Rational(ap - 1, 2) == y) m_minus += mult;
    }
    const long long m_plus = (E.count(y) ? 1 : 0) + m_minus;

    // The two exponents congruent to y that can carry a couple with upper
    // edge y are x_y and x_y - 1/2; the latter is the mirror of the already
    // determined (1/2 - x_y, 2(y - x_y)).
    const Rational neg_a_rat = (y - x_y) * 2;
    assert(neg_a_rat.is_integer());
    const long long neg_a = neg_a_rat.numerator();
    long long neg = 0;
    if (neg_a >= 1) {
      const auto found = determined.find({kHalf - x_y, neg_a});
      if (found != determined.end()) neg = found->second;
    }

    const long long remainder = m_plus - neg;
    const long long a_y = neg_a - 1;
    if (remainder < 0) {
      throw calc_error(errc::inconsistent,
                       "negative remainder " + std::to_string(remainder) + " at key " +
                           y.str());
    }
    if (remainder > 0) {
      if (a_y < 1) {
        throw calc_error(errc::inconsistent,
                         "remainder " + std::to_string(remainder) + " at key " + y.str() +
                             " requires a block of size " + std::to_string(a_y));
      }
      ms_add(determined, std::make_pair(x_y, a_y), remainder);
    }
  }
  return determined;
}

bool roundtrip_check(const SpehParam& e, const std::string& rho) {
  EPrime expected;
  for (const auto& [blk, mult] : e.blocks) {
    if (blk.sigma == rho && blk.x > Rational(0)) {
      ms_add(expected, std::make_pair(blk.x, blk.a), mult);
    }
  }
  return reconstruct(red_multiset(e, rho)) == expected;
}

}  // namespace cuspcalc

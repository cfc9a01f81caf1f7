#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuspcalc/multiset.hpp"
#include "cuspcalc/rational.hpp"
#include "cuspcalc/symbols.hpp"

namespace cuspcalc {

/// Building block of a two-parameter (Arthur-style) multisegment datum:
/// sigma tensor [b'] tensor [b], twisted by |det|^x with x in ]-1/2,1/2[.
struct ABlock {
  std::string sigma;
  long long bprime = 1;
  long long b = 1;
  Rational x;

  friend bool operator==(const ABlock&, const ABlock&) = default;
  friend std::strong_ordering operator<=>(const ABlock&, const ABlock&) = default;
};

/// Speh block: the module spanned by the exponent ladder
/// x + (a-1)/2 - k, k in [0, a-1], on symbol sigma.
struct SpehBlock {
  std::string sigma;
  long long a = 1;
  Rational x;

  friend bool operator==(const SpehBlock&, const SpehBlock&) = default;
  friend std::strong_ordering operator<=>(const SpehBlock&, const SpehBlock&) = default;
};

/// Steinberg (generalized discrete) block; same raw data as a Speh block but
/// read through the other Langlands-type extreme, so its L-factor sees only
/// the top exponent x + (a-1)/2.
struct SteinbergBlock {
  std::string sigma;
  long long a = 1;
  Rational x;

  friend bool operator==(const SteinbergBlock&, const SteinbergBlock&) = default;
  friend std::strong_ordering operator<=>(const SteinbergBlock&, const SteinbergBlock&) = default;
};

struct AParam {
  Multiset<ABlock> blocks;

  friend bool operator==(const AParam&, const AParam&) = default;
};

struct SpehParam {
  Multiset<SpehBlock> blocks;

  friend bool operator==(const SpehParam&, const SpehParam&) = default;
};

/// Cuspidal support: multiset of (symbol name, exponent).
using Support = Multiset<std::pair<std::string, Rational>>;

/// Validating factories. The twist x must lie strictly inside ]-1/2,1/2[;
/// boundary values are rejected here so they can never enter a parameter
/// silently. Sizes must be >= 1.
ABlock make_ablock(std::string sigma, long long bprime, long long b, Rational x);
SpehBlock make_speh_block(std::string sigma, long long a, Rational x);

void check_block(const ABlock& blk);
void check_block(const SpehBlock& blk);

/// Exponent ladder of one Speh block: {(sigma, x + (a-1)/2 - k) : 0 <= k < a}.
Support speh_support(const std::string& sigma, long long a, Rational x);

/// Full cuspidal support. An ABlock contributes the grid
/// {(sigma, x + i + j)} with i over the symmetric b-ladder and j over the
/// symmetric b'-ladder.
Support param_support(const AParam& p);
Support param_support(const SpehParam& p);

long long multiplicity(const Support& sup, const std::string& sigma, Rational s0);

/// Passage from the two-parameter datum to its Speh-block reading (the
/// Langlands-quotient decomposition). Each ABlock (sigma,b',b,x) contributes
/// the blocks (sigma, b+b'-1-2l, x) for l in [0, min(b,b')-1] - the unique
/// size family compatible with the weight-multiset identity below and hence
/// with preservation of cuspidal support.
SpehParam langlands_quotient(const AParam& p);

/// Reinterprets every Speh block as the Steinberg block on the same data.
Multiset<SteinbergBlock> l_parameter(const SpehParam& e);

/// Weight-multiset identity: {i + j} over the b x b' grid equals the disjoint
/// union of symmetric ladders of lengths b+b'-1-2l, l in [0, min(b,b')-1].
/// Both sides are enumerated explicitly.
bool cg_weight_identity(long long b, long long bprime);

struct ValidationReport {
  std::vector<std::string> violations;
  /// Set when a violation stems from data that cannot arise from any
  /// cuspidal datum (as opposed to a structural defect).
  bool inadmissible = false;
  bool ok() const { return violations.empty(); }
};

/// Structural validation: block ranges, symmetry under x -> -x, closure under
/// (sigma, x) -> (dual sigma, -x), and, when a form is given, the dimension
/// sum against the dual-group dimension. Violations are reported as data.
ValidationReport validate_param(const AParam& p, const SymbolTable& table,
                                const std::optional<GroupForm>& form);
ValidationReport validate_param(const SpehParam& e, const SymbolTable& table,
                                const std::optional<GroupForm>& form);

long long total_dim(const AParam& p, const SymbolTable& table);
long long total_dim(const SpehParam& e, const SymbolTable& table);

}  // namespace cuspcalc

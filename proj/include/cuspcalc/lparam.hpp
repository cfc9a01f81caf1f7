#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cuspcalc/param.hpp"
#include "cuspcalc/symbols.hpp"

namespace cuspcalc {

/// How one block of a formal parameter meets the ambient bilinear form:
/// carrying a symplectic or orthogonal form of its own, or pairing with a
/// distinct partner block along an isotropic subspace.
enum class PairingKind { SelfPairedSymplectic, SelfPairedOrthogonal, IsotropicPartner };

/// One irreducible summand sigma ||^x (x) [a] of the formal parameter, with
/// its pairing resolved.
struct FormalBlock {
  std::string sigma;
  long long a = 1;
  Rational x;
  PairingKind pairing = PairingKind::IsotropicPartner;
  std::size_t partner = 0;  // index into FormalParameter::blocks when IsotropicPartner

  friend bool operator==(const FormalBlock&, const FormalBlock&) = default;
};

/// The full formal parameter: a block decomposition whose dimensions sum to
/// the ambient GL dimension of the form.
struct FormalParameter {
  std::vector<FormalBlock> blocks;
  GroupForm form;
};

/// Type of the invariant bilinear form on a self-dual block sigma (x) [a]:
/// the tensor rule pairs the symbol's own type with the type of the
/// a-dimensional SL(2) factor (symplectic for even a, orthogonal for odd a);
/// equal types compose to Orthogonal, opposite types to Symplectic. Throws
/// NotSelfDualInput when sd is NotSelfDual.
FormType block_pairing_type(SelfDualType sd, long long a);

/// Assembles the formal parameter of e: resolves each block's pairing and
/// checks the global structure. Throws DimensionMismatch when the dimension
/// sum misses the ambient dimension, and ClosureViolation when a twisted or
/// non-self-dual block lacks its dual partner (or the twist symmetry fails),
/// so that construction succeeds exactly on parameters validate_param
/// accepts.
FormalParameter build_parameter(const SpehParam& e, const SymbolTable& table,
                                const GroupForm& form);

/// Checks that the parameter lands, up to conjugacy, in the dual group of
/// the form: every self-paired block must carry a form of the ambient type.
/// Isotropic pairs impose nothing.
ValidationReport factors_through_LG(const FormalParameter& p);

/// True when every block is untwisted (x = 0): the parameter hits no proper
/// parabolic subgroup.
bool is_elliptic(const SpehParam& e);

}  // namespace cuspcalc

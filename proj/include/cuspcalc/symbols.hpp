#pragma once

#include <map>
#include <string>
#include <vector>

#include "cuspcalc/error.hpp"

namespace cuspcalc {

/// Self-duality type of a cuspidal symbol: the symmetry of the bilinear form
/// preserved by the corresponding dual-group representation, or NotSelfDual.
enum class SelfDualType { Symplectic, Orthogonal, NotSelfDual };

/// Two-valued form type used for dual-group types, tensor-factor types and
/// block pairings.
enum class FormType { Symplectic, Orthogonal };

const char* to_string(SelfDualType t);
const char* to_string(FormType t);

/// Abstract cuspidal datum: an opaque name, the dimension of the associated
/// dual-group representation, the name of its dual, and its self-duality type.
struct CuspidalSymbol {
  std::string name;
  long long dim = 0;
  std::string dual;
  SelfDualType sd_type = SelfDualType::NotSelfDual;
};

/// Finite set of cuspidal symbols, closed under duality.
///
/// Invariants: names unique; dual(dual(s)) == s with matching dims; a symbol
/// with sd_type != NotSelfDual is its own dual; Symplectic symbols have even
/// dimension.
class SymbolTable {
 public:
  /// Registers a batch of symbols atomically. Dual references may point at
  /// symbols of the same batch, which is how non-self-dual pairs enter.
  void register_symbols(const std::vector<CuspidalSymbol>& batch);
  void register_symbol(const CuspidalSymbol& sym) { register_symbols({sym}); }

  bool has(const std::string& name) const { return symbols_.count(name) != 0; }
  const CuspidalSymbol& at(const std::string& name) const;
  const std::string& dual_of(const std::string& name) const { return at(name).dual; }
  bool self_dual(const std::string& name) const {
    return at(name).sd_type != SelfDualType::NotSelfDual;
  }

  const std::map<std::string, CuspidalSymbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

 private:
  std::map<std::string, CuspidalSymbol> symbols_;
};

enum class GroupKind { Sp, SOodd, Oeven };

const char* to_string(GroupKind k);

/// Classical group form: Sp(2n), SO(2n+1) or O(2n).
struct GroupForm {
  GroupKind kind = GroupKind::Sp;
  long long n = 0;
};

enum class RKind { Sym2, Wedge2 };

const char* to_string(RKind r);

/// Data derived from a GroupForm: epsilon (1 exactly for Sp), the dual-group
/// dimension 2n+epsilon, the dual-group form type, and which of Sym^2/wedge^2
/// the normalization ratio uses (Sym^2 exactly when the dual group is
/// symplectic).
struct GroupData {
  int epsilon = 0;
  long long lg_dim = 0;
  FormType lg_type = FormType::Orthogonal;
  RKind r_kind = RKind::Wedge2;
};

GroupData group_data(const GroupForm& form);

}  // namespace cuspcalc

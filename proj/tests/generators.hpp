#pragma once

// Deterministic corpus generators shared by the unit and acceptance suites.
// All randomness flows from fixed-seed mt19937_64 engines through modulo
// draws, so every run sees the same corpus on every platform.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cuspcalc/lfactor.hpp"
#include "cuspcalc/param.hpp"
#include "cuspcalc/symbols.hpp"

namespace gen {

using namespace cuspcalc;

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

/// Six symbols covering: odd/even dimensions, both self-dual types, and one
/// non-self-dual pair.
inline SymbolTable standard_table() {
  SymbolTable t;
  t.register_symbols({
      {"rho1o", 1, "rho1o", SelfDualType::Orthogonal},
      {"rho2s", 2, "rho2s", SelfDualType::Symplectic},
      {"rho2o", 2, "rho2o", SelfDualType::Orthogonal},
      {"rho3o", 3, "rho3o", SelfDualType::Orthogonal},
      {"tau", 2, "taud", SelfDualType::NotSelfDual},
      {"taud", 2, "tau", SelfDualType::NotSelfDual},
  });
  return t;
}

inline std::vector<std::string> self_dual_names() {
  return {"rho1o", "rho2s", "rho2o", "rho3o"};
}

struct Sample {
  SpehParam e;
  GroupForm form;
};

/// Adds the full no-gap chain at x = 0 for a self-dual symbol: {1,3,...} or
/// {2,4,...} according to the parity its eps_prime forces.
inline void add_untwisted_chain(SpehParam& e, const std::string& rho, bool even_parity,
                                long long len) {
  for (long long i = 1; i <= len; ++i) {
    ms_add(e.blocks, SpehBlock{rho, even_parity ? 2 * i : 2 * i - 1, Rational(0)}, 1);
  }
}

/// Adds a twisted family at exponents +-x: odd sizes 1,3,...,2k-1 with a
/// multiplicity profile that is non-increasing, drops by at most 1 per step,
/// and ends at 1 -- exactly the shape whose signed bookkeeping stays in
/// {0,1}. Non-self-dual symbols get their dual partner blocks too.
inline void add_twisted_family(SpehParam& e, const SymbolTable& table,
                               const std::string& sigma, const Rational& x,
                               const std::vector<long long>& profile) {
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const long long a = 2 * static_cast<long long>(i) + 1;
    const long long m = profile[i];
    if (m <= 0) continue;
    ms_add(e.blocks, SpehBlock{sigma, a, x}, m);
    ms_add(e.blocks, SpehBlock{sigma, a, -x}, m);
    if (!table.self_dual(sigma)) {
      ms_add(e.blocks, SpehBlock{table.dual_of(sigma), a, x}, m);
      ms_add(e.blocks, SpehBlock{table.dual_of(sigma), a, -x}, m);
    }
  }
}

/// Draws a profile (multiplicities of 1,3,...,2k-1) built from the top: the
/// largest size has multiplicity 1 and each step down adds 0 or 1.
inline std::vector<long long> draw_profile(std::mt19937_64& rng) {
  const std::size_t k = 1 + draw(rng, 3);
  std::vector<long long> profile(k, 1);
  for (std::size_t i = k; i-- > 1;) {
    profile[i - 1] = profile[i] + static_cast<long long>(draw(rng, 2));
  }
  return profile;
}

/// Picks a form matching the dimension sum of e for the wanted dual-group
/// type; nothing matches when the parity is wrong (caller redraws).
inline std::optional<GroupForm> match_form(const SpehParam& e, const SymbolTable& table,
                                           FormType lg_type) {
  const long long dim = total_dim(e, table);
  if (dim <= 0) return std::nullopt;
  if (lg_type == FormType::Symplectic) {
    if (dim % 2 != 0) return std::nullopt;
    return GroupForm{GroupKind::SOodd, dim / 2};
  }
  if (dim % 2 != 0) return GroupForm{GroupKind::Sp, (dim - 1) / 2};
  return GroupForm{GroupKind::Oeven, dim / 2};
}

/// One attempt at an admissible parameter; rejection-sample by calling until
/// it returns a value. `twisted` forces at least one x != 0 family,
/// `untwisted_only` forbids them.
inline std::optional<Sample> try_sample(std::mt19937_64& rng, const SymbolTable& table,
                                        bool twisted, bool untwisted_only) {
  const FormType lg_type = draw(rng, 2) ? FormType::Symplectic : FormType::Orthogonal;
  SpehParam e;

  for (const std::string& name : self_dual_names()) {
    if (draw(rng, 2) == 0) continue;
    const SelfDualType sd = table.at(name).sd_type;
    const bool even_parity =
        (sd == SelfDualType::Symplectic ? FormType::Symplectic : FormType::Orthogonal) !=
        lg_type;
    add_untwisted_chain(e, name, even_parity, 1 + static_cast<long long>(draw(rng, 3)));
  }

  if (!untwisted_only) {
    static const std::vector<Rational> magnitudes = {
        {1, 4}, {1, 3}, {1, 5}, {1, 6}, {2, 5}};
    static const std::vector<std::string> pool = {"rho1o", "rho2s", "rho2o",
                                                  "rho3o", "tau"};
    const std::size_t families = twisted ? 1 + draw(rng, 2) : draw(rng, 2);
    std::vector<std::string> used;
    for (std::size_t i = 0; i < families; ++i) {
      const std::string& sigma = pool[draw(rng, pool.size())];
      bool clash = false;
      for (const std::string& u : used) {
        if (u == sigma || u == table.dual_of(sigma)) clash = true;
      }
      if (clash) continue;
      used.push_back(sigma);
      add_twisted_family(e, table, sigma, magnitudes[draw(rng, magnitudes.size())],
                         draw_profile(rng));
    }
    if (twisted && used.empty()) return std::nullopt;
  }

  if (e.blocks.empty()) return std::nullopt;
  const std::optional<GroupForm> form = match_form(e, table, lg_type);
  if (!form) return std::nullopt;
  return Sample{std::move(e), *form};
}

inline Sample sample(std::mt19937_64& rng, const SymbolTable& table, bool twisted,
                     bool untwisted_only) {
  for (;;) {
    if (std::optional<Sample> s = try_sample(rng, table, twisted, untwisted_only)) {
      return *std::move(s);
    }
  }
}

/// Random structurally valid AParam over at most 4 symbols with b, b' <= 5
/// and x in {0, +-1/4, +-1/3}: blocks are added as whole symmetry orbits so
/// the twist and duality closures hold by construction.
inline std::optional<std::pair<AParam, GroupForm>> try_sample_aparam(
    std::mt19937_64& rng, const SymbolTable& table) {
  static const std::vector<std::string> pool = {"rho1o", "rho2s", "tau", "taud"};
  static const std::vector<Rational> twists = {{0, 1}, {1, 4}, {-1, 4}, {1, 3}, {-1, 3}};
  AParam p;
  const std::size_t orbits = 1 + draw(rng, 3);
  for (std::size_t i = 0; i < orbits; ++i) {
    const std::string& sigma = pool[draw(rng, pool.size())];
    const long long bprime = 1 + static_cast<long long>(draw(rng, 5));
    const long long b = 1 + static_cast<long long>(draw(rng, 5));
    const Rational x = twists[draw(rng, twists.size())];
    Multiset<ABlock> orbit;
    ms_add(orbit, ABlock{sigma, bprime, b, x}, 1);
    ms_add(orbit, ABlock{sigma, bprime, b, -x}, 1);
    ms_add(orbit, ABlock{table.dual_of(sigma), bprime, b, x}, 1);
    ms_add(orbit, ABlock{table.dual_of(sigma), bprime, b, -x}, 1);
    for (const auto& [blk, mult] : orbit) {
      (void)mult;
      ms_add(p.blocks, blk, 1);
    }
  }
  long long dim = total_dim(p, table);
  GroupForm form{GroupKind::Sp, 0};
  if (dim % 2 == 1) {
    if (dim < 3) return std::nullopt;
    form = {GroupKind::Sp, (dim - 1) / 2};
  } else {
    form = {draw(rng, 2) ? GroupKind::SOodd : GroupKind::Oeven, dim / 2};
  }
  return std::make_pair(std::move(p), form);
}

inline std::pair<AParam, GroupForm> sample_aparam(std::mt19937_64& rng,
                                                  const SymbolTable& table) {
  for (;;) {
    if (auto s = try_sample_aparam(rng, table)) return *std::move(s);
  }
}

/// Shape mutations that break the Jordan-block structure at x = 0 while
/// leaving the blocks individually well-formed. Every mutant fails
/// validate_jord; the consistency identities must reject it too.
enum class Mutation { DuplicateBlock, GapAboveTop, WrongParitySingle, WrongParityChain };

/// Applies the mutation to an untwisted sample on a self-dual symbol with a
/// nonempty chain; returns the mutated symbol name.
inline std::optional<std::string> mutate(SpehParam& e, const SymbolTable& table,
                                         const GroupForm& form, Mutation kind,
                                         std::mt19937_64& rng) {
  std::vector<std::string> with_chain;
  for (const std::string& name : self_dual_names()) {
    Rational zero(0);
    for (const auto& [blk, mult] : e.blocks) {
      if (blk.sigma == name && blk.x == zero && mult > 0) {
        with_chain.push_back(name);
        break;
      }
    }
  }
  if (with_chain.empty()) return std::nullopt;
  const std::string rho = with_chain[draw(rng, with_chain.size())];
  long long top = 0;
  for (const auto& [blk, mult] : e.blocks) {
    if (blk.sigma == rho && blk.x == Rational(0)) top = std::max(top, blk.a);
  }
  switch (kind) {
    case Mutation::DuplicateBlock:
      ms_add(e.blocks, SpehBlock{rho, top, Rational(0)}, 1);
      return rho;
    case Mutation::GapAboveTop:
      ms_add(e.blocks, SpehBlock{rho, top + 4, Rational(0)}, 1);
      return rho;
    case Mutation::WrongParitySingle:
      ms_add(e.blocks, SpehBlock{rho, top + 1, Rational(0)}, 1);
      return rho;
    case Mutation::WrongParityChain: {
      // Replace the whole chain 1,3,...,t by 2,4,...,t+1 (or conversely).
      std::vector<SpehBlock> old_blocks;
      for (const auto& [blk, mult] : e.blocks) {
        if (blk.sigma == rho && blk.x == Rational(0)) {
          for (long long i = 0; i < mult; ++i) old_blocks.push_back(blk);
        }
      }
      for (const SpehBlock& blk : old_blocks) {
        ms_add(e.blocks, blk, -1);
        ms_add(e.blocks, SpehBlock{rho, blk.a + 1, blk.x}, 1);
      }
      return rho;
    }
  }
  return std::nullopt;
}

}  // namespace gen

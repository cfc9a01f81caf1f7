#include "cuspcalc/param.hpp"

#include <algorithm>

namespace cuspcalc {

namespace {

const Rational kHalf(1, 2);

void check_twist(const Rational& x) {
  if (!(x < kHalf) || !(-kHalf < x))
    throw calc_error(errc::validation_error,
                     "twist x=" + x.str() + " outside the open interval ]-1/2,1/2[");
}

/// Symmetric ladder of length n: (n-1)/2, (n-1)/2 - 1, ..., -(n-1)/2.
std::vector<Rational> ladder(long long n) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  Rational top(n - 1, 2);
  for (long long k = 0; k < n; ++k) out.push_back(top - Rational(k));
  return out;
}

}  // namespace

ABlock make_ablock(std::string sigma, long long bprime, long long b, Rational x) {
  ABlock blk{std::move(sigma), bprime, b, x};
  check_block(blk);
  return blk;
}

SpehBlock make_speh_block(std::string sigma, long long a, Rational x) {
  SpehBlock blk{std::move(sigma), a, x};
  check_block(blk);
  return blk;
}

void check_block(const ABlock& blk) {
  if (blk.bprime < 1 || blk.b < 1)
    throw calc_error(errc::validation_error, "block sizes must be >= 1");
  check_twist(blk.x);
}

void check_block(const SpehBlock& blk) {
  if (blk.a < 1) throw calc_error(errc::validation_error, "block size must be >= 1");
  check_twist(blk.x);
}

Support speh_support(const std::string& sigma, long long a, Rational x) {
  if (a < 1) throw calc_error(errc::domain_error, "speh_support needs a >= 1");
  Support sup;
  for (const Rational& w : ladder(a)) ms_add(sup, {sigma, x + w});
  return sup;
}

Support param_support(const AParam& p) {
  Support sup;
  for (const auto& [blk, mult] : p.blocks) {
    for (const Rational& i : ladder(blk.b))
      for (const Rational& j : ladder(blk.bprime))
        ms_add(sup, {blk.sigma, blk.x + i + j}, mult);
  }
  return sup;
}

Support param_support(const SpehParam& p) {
  Support sup;
  for (const auto& [blk, mult] : p.blocks)
    for (const Rational& w : ladder(blk.a)) ms_add(sup, {blk.sigma, blk.x + w}, mult);
  return sup;
}

long long multiplicity(const Support& sup, const std::string& sigma, Rational s0) {
  return ms_count(sup, {sigma, s0});
}

SpehParam langlands_quotient(const AParam& p) {
  SpehParam e;
  for (const auto& [blk, mult] : p.blocks) {
    long long m = std::min(blk.b, blk.bprime);
    for (long long l = 0; l < m; ++l)
      ms_add(e.blocks, SpehBlock{blk.sigma, blk.b + blk.bprime - 1 - 2 * l, blk.x}, mult);
  }
  return e;
}

Multiset<SteinbergBlock> l_parameter(const SpehParam& e) {
  Multiset<SteinbergBlock> l;
  for (const auto& [blk, mult] : e.blocks)
    ms_add(l, SteinbergBlock{blk.sigma, blk.a, blk.x}, mult);
  return l;
}

bool cg_weight_identity(long long b, long long bprime) {
  if (b < 1 || bprime < 1)
    throw calc_error(errc::domain_error, "cg_weight_identity needs b, b' >= 1");
  Multiset<Rational> grid;
  for (const Rational& i : ladder(b))
    for (const Rational& j : ladder(bprime)) ms_add(grid, i + j);
  Multiset<Rational> split;
  for (long long l = 0; l < std::min(b, bprime); ++l)
    for (const Rational& w : ladder(b + bprime - 1 - 2 * l)) ms_add(split, w);
  return grid == split;
}

long long total_dim(const AParam& p, const SymbolTable& table) {
  long long d = 0;
  for (const auto& [blk, mult] : p.blocks)
    d += table.at(blk.sigma).dim * blk.bprime * blk.b * mult;
  return d;
}

long long total_dim(const SpehParam& e, const SymbolTable& table) {
  long long d = 0;
  for (const auto& [blk, mult] : e.blocks) d += table.at(blk.sigma).dim * blk.a * mult;
  return d;
}

namespace {

template <class Block, class MirrorFn, class DualFn>
void check_symmetries(const Multiset<Block>& blocks, MirrorFn mirror, DualFn dual,
                      ValidationReport& rep, const char* what) {
  for (const auto& [blk, mult] : blocks) {
    if (ms_count(blocks, mirror(blk)) != mult)
      rep.violations.push_back(std::string("twist symmetry broken for ") + what + " " +
                               blk.sigma + " at x=" + blk.x.str());
    if (ms_count(blocks, dual(blk)) != mult)
      rep.violations.push_back(std::string("autoduality closure broken for ") + what +
                               " " + blk.sigma + " at x=" + blk.x.str());
  }
}

void check_dim(long long have, const std::optional<GroupForm>& form,
               ValidationReport& rep) {
  if (!form) return;
  long long want = group_data(*form).lg_dim;
  if (have != want)
    rep.violations.push_back("dimension sum " + std::to_string(have) +
                             " does not match dual-group dimension " +
                             std::to_string(want));
}

}  // namespace

ValidationReport validate_param(const AParam& p, const SymbolTable& table,
                                const std::optional<GroupForm>& form) {
  ValidationReport rep;
  for (const auto& [blk, mult] : p.blocks) {
    if (mult < 0) rep.violations.push_back("negative multiplicity");
    if (!table.has(blk.sigma)) {
      rep.violations.push_back("unknown symbol '" + blk.sigma + "'");
      return rep;
    }
    try {
      check_block(blk);
    } catch (const calc_error& e) {
      rep.violations.push_back(e.what());
    }
  }
  check_symmetries(
      p.blocks, [](const ABlock& b) { return ABlock{b.sigma, b.bprime, b.b, -b.x}; },
      [&](const ABlock& b) { return ABlock{table.dual_of(b.sigma), b.bprime, b.b, -b.x}; },
      rep, "block");
  if (rep.ok()) check_dim(total_dim(p, table), form, rep);
  return rep;
}

ValidationReport validate_param(const SpehParam& e, const SymbolTable& table,
                                const std::optional<GroupForm>& form) {
  ValidationReport rep;
  for (const auto& [blk, mult] : e.blocks) {
    if (mult < 0) rep.violations.push_back("negative multiplicity");
    if (!table.has(blk.sigma)) {
      rep.violations.push_back("unknown symbol '" + blk.sigma + "'");
      return rep;
    }
    try {
      check_block(blk);
    } catch (const calc_error& err) {
      rep.violations.push_back(err.what());
    }
  }
  check_symmetries(
      e.blocks, [](const SpehBlock& b) { return SpehBlock{b.sigma, b.a, -b.x}; },
      [&](const SpehBlock& b) { return SpehBlock{table.dual_of(b.sigma), b.a, -b.x}; },
      rep, "sblock");
  if (rep.ok()) check_dim(total_dim(e, table), form, rep);
  return rep;
}

}  // namespace cuspcalc

// Acceptance harness: prints exactly one PASS/FAIL line per criterion and
// exits with the number of failed criteria. Invoke as: acceptance <calc-path>.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cuspcalc/lfactor.hpp"
#include "cuspcalc/lparam.hpp"
#include "cuspcalc/param.hpp"
#include "cuspcalc/reconstruction.hpp"
#include "cuspcalc/reducibility.hpp"
#include "generators.hpp"

using namespace cuspcalc;

namespace {

// Tolerances and corpus sizes pinned here, not configurable.
constexpr double kMaxCgSeconds = 1.0;
constexpr double kMaxSupportSeconds = 5.0;
constexpr int kSupportCorpus = 1000;
constexpr int kCShapeCorpus = 1000;
constexpr int kMutantCorpus = 200;
constexpr int kRoundtripCorpus = 1000;
constexpr int kOrderCorpus = 250;
constexpr long long kGridBound = 4;

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " — "
            << detail << "\n";
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Rational> candidate_grid(const SpehParam& e) {
  std::set<Rational> base = {Rational(0), Rational(1, 2), Rational(-1, 2)};
  for (const auto& [blk, mult] : e.blocks) {
    for (int sx : {1, -1}) {
      for (long long off : {blk.a - 1, blk.a + 1}) {
        const Rational x = sx > 0 ? blk.x : -blk.x;
        base.insert(x + Rational(off, 2));
        base.insert(x - Rational(off, 2));
      }
    }
  }
  std::set<Rational> grid;
  for (const Rational& c : base) {
    for (long long k = -2 * kGridBound; k <= 2 * kGridBound; ++k) {
      const Rational s0 = c + Rational(k);
      if (-Rational(kGridBound) <= s0 && s0 <= Rational(kGridBound)) grid.insert(s0);
    }
  }
  return {grid.begin(), grid.end()};
}

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  int checked = 0;
  int bad = 0;
  for (long long b = 1; b <= 8; ++b) {
    for (long long bp = 1; bp <= 8; ++bp) {
      ++checked;
      if (!cg_weight_identity(b, bp)) ++bad;
    }
  }
  const double secs = seconds_since(start);
  std::ostringstream detail;
  detail << "weight identity on " << checked << " size pairs, " << bad << " failures, "
         << secs << "s (limit " << kMaxCgSeconds << "s)";
  report(1, bad == 0 && secs < kMaxCgSeconds, detail.str());
}

void criterion_2() {
  const SymbolTable t = gen::standard_table();
  std::mt19937_64 rng(1002);
  const auto start = std::chrono::steady_clock::now();
  int bad = 0;
  for (int i = 0; i < kSupportCorpus; ++i) {
    auto [p, form] = gen::sample_aparam(rng, t);
    if (param_support(langlands_quotient(p)) != param_support(p)) ++bad;
  }
  const double secs = seconds_since(start);
  std::ostringstream detail;
  detail << kSupportCorpus << " random two-parameter data, " << bad
         << " support mismatches, " << secs << "s (limit " << kMaxSupportSeconds << "s)";
  report(2, bad == 0 && secs < kMaxSupportSeconds, detail.str());
}

void criterion_3() {
  const SymbolTable t = gen::standard_table();
  const O2nFlags flags{};
  std::mt19937_64 rng(1003);
  int consistency_bad = 0;
  int closed_form_bad = 0;
  int jord_bad = 0;
  for (int i = 0; i < kCShapeCorpus; ++i) {
    const gen::Sample s = gen::sample(rng, t, false, /*untwisted_only=*/true);
    for (const auto& [name, sym] : t.symbols()) {
      if (!consistency_check(s.e, name, t, s.form, flags).ok()) {
        ++consistency_bad;
        continue;
      }
      if (!validate_jord(s.e, name, t, s.form).ok()) ++jord_bad;
      std::set<Rational> expect;
      const ExtNat a = a_rho(s.e, name, t, s.form);
      if (!a.is_infinite()) {
        const long long max_a = a.kind == ExtNat::Kind::MinusOne ? -1 : a.value;
        expect.insert(Rational(max_a + 1, 2));
      }
      if (red_points(s.e, name, t, s.form, flags) != expect) ++closed_form_bad;
    }
  }

  int mutants = 0;
  int false_accepts = 0;
  const gen::Mutation kinds[] = {gen::Mutation::DuplicateBlock, gen::Mutation::GapAboveTop,
                                 gen::Mutation::WrongParitySingle,
                                 gen::Mutation::WrongParityChain};
  while (mutants < kMutantCorpus) {
    gen::Sample s = gen::sample(rng, t, false, /*untwisted_only=*/true);
    const gen::Mutation kind = kinds[mutants % 4];
    const std::optional<std::string> rho = gen::mutate(s.e, t, s.form, kind, rng);
    if (!rho) continue;
    if (validate_jord(s.e, *rho, t, s.form).ok()) continue;  // mutation was absorbed
    ++mutants;
    if (consistency_check(s.e, *rho, t, s.form, flags).ok()) ++false_accepts;
  }

  std::ostringstream detail;
  detail << kCShapeCorpus << " untwisted parameters: " << consistency_bad
         << " consistency rejections, " << closed_form_bad << " closed-form mismatches, "
         << jord_bad << " shape failures; " << mutants << " mutants: " << false_accepts
         << " false accepts";
  report(3,
         consistency_bad == 0 && closed_form_bad == 0 && jord_bad == 0 && false_accepts == 0,
         detail.str());
}

void criterion_4() {
  const SymbolTable t = gen::standard_table();
  std::mt19937_64 rng(1004);
  int bad = 0;
  for (int i = 0; i < kRoundtripCorpus; ++i) {
    const gen::Sample s = gen::sample(rng, t, /*twisted=*/true, false);
    for (const auto& [name, sym] : t.symbols()) {
      if (!roundtrip_check(s.e, name)) ++bad;
    }
  }

  bool hand_ok = reconstruct(RedSet{}).empty();
  {
    EPrime expect;
    ms_add(expect, std::make_pair(Rational(1, 4), 1LL), 1);
    hand_ok = hand_ok && reconstruct(RedSet{Rational(3, 4), Rational(5, 4)}) == expect;
  }
  {
    SpehParam e;
    ms_add(e.blocks, SpehBlock{"rho1o", 2, Rational(1, 4)}, 1);
    ms_add(e.blocks, SpehBlock{"rho1o", 2, Rational(-1, 4)}, 1);
    bool threw = false;
    try {
      red_multiset(e, "rho1o");
    } catch (const calc_error& err) {
      threw = err.code() == errc::inadmissible_param;
    }
    hand_ok = hand_ok && threw;
  }

  std::ostringstream detail;
  detail << kRoundtripCorpus << " twisted parameters, " << bad
         << " roundtrip failures; hand examples " << (hand_ok ? "exact" : "WRONG");
  report(4, bad == 0 && hand_ok, detail.str());
}

void criterion_5() {
  const SymbolTable t = gen::standard_table();
  std::mt19937_64 rng(1005);
  long long points = 0;
  long long bad = 0;
  for (int i = 0; i < kOrderCorpus; ++i) {
    const gen::Sample s = gen::sample(rng, t, i % 2 == 0, i % 2 != 0);
    const std::vector<Rational> grid = candidate_grid(s.e);
    for (const auto& [name, sym] : t.symbols()) {
      for (const Rational& s0 : grid) {
        ++points;
        if (product_order(NormStyle::Arthur, t, name, s.e, s.form, s0) !=
            product_order(NormStyle::Langlands, t, name, s.e, s.form, s0)) {
          ++bad;
        }
      }
    }
  }
  std::ostringstream detail;
  detail << kOrderCorpus << " parameters, " << points << " grid evaluations, " << bad
         << " order mismatches";
  report(5, bad == 0, detail.str());
}

void criterion_6() {
  const SymbolTable t = gen::standard_table();
  std::mt19937_64 rng(1006);
  long long l_pole_violations = 0;
  std::string first_l_violation;
  long long a_set_mismatches = 0;
  long long nonsimple = 0;

  for (int i = 0; i < kOrderCorpus; ++i) {
    const bool untwisted = i % 2 != 0;
    const gen::Sample s = gen::sample(rng, t, !untwisted, untwisted);
    for (const auto& [name, sym] : t.symbols()) {
      const OrderLedger led_l = zero_pole_locus(NormStyle::Langlands, t, name, s.e, s.form);
      for (const auto& [s0, ord] : led_l.entries) {
        if (s0 > Rational(0) && ord < 0) {
          ++l_pole_violations;
          if (first_l_violation.empty()) {
            first_l_violation = "rho=" + name + " s0=" + s0.str() + " ord=" +
                                std::to_string(ord);
          }
        }
      }

      const OrderLedger led_a = zero_pole_locus(NormStyle::Arthur, t, name, s.e, s.form);
      std::set<Rational> got;
      for (const auto& [s0, ord] : led_a.entries) {
        if (s0 > Rational(0) && ord < 0) {
          got.insert(s0);
          if (untwisted && ord != -1) ++nonsimple;
        }
      }
      std::set<Rational> expect;
      for (const auto& [blk, mult] : s.e.blocks) {
        if (blk.sigma != name) continue;
        const Rational top = blk.x + Rational(blk.a - 1, 2);
        if (top > Rational(0)) expect.insert(top);
      }
      if (got != expect) ++a_set_mismatches;
    }
  }

  std::ostringstream detail;
  detail << "Langlands-style poles on s0>0: " << l_pole_violations << " (want 0";
  if (l_pole_violations > 0) detail << "; first: " << first_l_violation;
  detail << "); Arthur pole-set mismatches: " << a_set_mismatches
         << "; non-simple untwisted poles: " << nonsimple
         << ". Size-1 twisted blocks make the first clause unattainable: both styles read "
            "(sigma,1,x) identically, and the second clause requires the pole at s0=-x.";
  report(6, l_pole_violations == 0 && a_set_mismatches == 0 && nonsimple == 0, detail.str());
}

void criterion_7() {
  const SymbolTable t = gen::standard_table();
  std::mt19937_64 rng(1007);
  int factor_bad = 0;
  int elliptic_bad = 0;
  for (int i = 0; i < kOrderCorpus; ++i) {
    const gen::Sample s = gen::sample(rng, t, i % 2 == 0, i % 2 != 0);
    bool jord_ok = true;
    for (const std::string& name : gen::self_dual_names()) {
      if (!validate_jord(s.e, name, t, s.form).ok()) jord_ok = false;
    }
    if (jord_ok && !factors_through_LG(build_parameter(s.e, t, s.form)).ok()) ++factor_bad;

    bool all_empty = true;
    for (const auto& [name, sym] : t.symbols()) {
      if (!red_multiset(s.e, name).empty()) all_empty = false;
    }
    if (is_elliptic(s.e) != all_empty) ++elliptic_bad;
  }
  std::ostringstream detail;
  detail << kOrderCorpus << " parameters: " << factor_bad << " dual-group failures, "
         << elliptic_bad << " ellipticity disagreements";
  report(7, factor_bad == 0 && elliptic_bad == 0, detail.str());
}

struct RunOutput {
  std::string text;
  int exit_code = -1;
};

std::optional<RunOutput> run_command(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return std::nullopt;
  RunOutput out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.text.append(buf.data(), n);
  const int status = pclose(pipe);
  out.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return out;
}

void criterion_8(const std::string& calc_path) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "calc-acceptance";
  fs::create_directories(dir);
  const fs::path table = dir / "table.txt";
  const fs::path param = dir / "param.txt";
  {
    std::ofstream t(table);
    t << "symbol rho dim=1 type=orthogonal dual=rho\n"
         "symbol tau dim=2 type=none dual=taud\n"
         "symbol taud dim=2 type=none dual=tau\n";
    std::ofstream p(param);
    p << "sblock sigma=rho a=3 x=0\n"
         "sblock sigma=rho a=1 x=0\n";
  }
  const std::string command = "\"" + calc_path + "\" \"" + table.string() + "\" \"" +
                              param.string() + "\" --group o-even --n 2 check 2>/dev/null";
  const std::optional<RunOutput> first = run_command(command);
  const std::optional<RunOutput> second = run_command(command);
  if (!first || !second) {
    report(8, false, "could not launch '" + calc_path + "'");
    return;
  }
  const bool identical =
      first->text == second->text && first->exit_code == second->exit_code;
  const bool sane = first->exit_code == 0 && !first->text.empty() &&
                    first->text.find("check: ok") != std::string::npos;
  std::ostringstream detail;
  detail << "two `check` runs: " << (identical ? "byte-identical" : "DIFFER") << ", exit "
         << first->exit_code << "/" << second->exit_code << ", " << first->text.size()
         << " bytes";
  report(8, identical && sane, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-calc>\n";
    return 64;
  }
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8(argv[1]);
  return failures;
}

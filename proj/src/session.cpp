#include "cuspcalc/session.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <type_traits>

#include "cuspcalc/error.hpp"
#include "cuspcalc/io.hpp"
#include "cuspcalc/lfactor.hpp"
#include "cuspcalc/lparam.hpp"
#include "cuspcalc/reconstruction.hpp"

namespace cuspcalc {

namespace {

std::string require_rho(const std::optional<std::string>& rho, const SymbolTable& table) {
  if (!rho) throw calc_error(errc::validation_error, "this command requires --rho <name>");
  table.at(*rho);  // throws ValidationError for unknown names
  return *rho;
}

template <class Set>
std::string format_braced(const Set& values) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ", ";
    first = false;
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>) {
      out += v.str();
    } else {
      out += std::to_string(v);
    }
  }
  out += "}";
  return out;
}

std::string cmd_support(const Session& s) {
  std::string out;
  for (const auto& [key, mult] : param_support(s.param)) {
    out += "(" + key.first + ", " + key.second.str() + ") * " + std::to_string(mult) + "\n";
  }
  return out;
}

std::string cmd_aparam(const Session& s) { return format_param(s.param); }

std::string cmd_lparam(const Session& s) {
  std::vector<std::string> lines;
  for (const auto& [blk, mult] : l_parameter(s.e)) {
    for (long long i = 0; i < mult; ++i) {
      lines.push_back("steinberg sigma=" + blk.sigma + " a=" + std::to_string(blk.a) +
                      " x=" + blk.x.str());
    }
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

std::string cmd_jord(const Session& s, const std::string& rho, const Rational& x) {
  std::vector<long long> values;
  for (const auto& [a, mult] : jord(s.e, rho, x)) {
    for (long long i = 0; i < mult; ++i) values.push_back(a);
  }
  return "jord = " + format_braced(values) + "\n";
}

std::string cmd_red(const Session& s, const std::string& rho) {
  return "red = " + format_braced(red_points(s.e, rho, s.table, s.form, s.flags)) + "\n";
}

std::string cmd_norm(const Session& s, const std::string& rho, const std::string& style) {
  if (style != "A" && style != "L") {
    throw calc_error(errc::validation_error, "--style must be A or L; got '" + style + "'");
  }
  const NormStyle ns = style == "A" ? NormStyle::Arthur : NormStyle::Langlands;
  std::string out = "style=" + style + " rho=" + rho + "\n";
  for (const auto& [s0, ord] : zero_pole_locus(ns, s.table, rho, s.e, s.form).entries) {
    out += "s=" + s0.str() + " ord=" + std::to_string(ord) + "\n";
  }
  return out;
}

std::string cmd_reconstruct(const std::vector<std::string>& rest) {
  std::vector<Rational> values;
  if (!rest.empty()) {
    for (const std::string& tok : rest) values.push_back(Rational::parse(tok));
  } else {
    std::string tok;
    while (std::cin >> tok) values.push_back(Rational::parse(tok));
  }
  std::string out;
  for (const auto& [couple, mult] : reconstruct(make_red_set(values))) {
    out += "(" + couple.first.str() + ", " + std::to_string(couple.second) + ") * " +
           std::to_string(mult) + "\n";
  }
  return out;
}

std::string cmd_lgroup(const Session& s) {
  const FormalParameter p = build_parameter(s.e, s.table, s.form);
  std::string out;
  out += std::string("factors_through_LG: ") + (factors_through_LG(p).ok() ? "yes" : "no") + "\n";
  out += std::string("elliptic: ") + (is_elliptic(s.e) ? "yes" : "no") + "\n";
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const FormalBlock& blk = p.blocks[i];
    out += "[" + std::to_string(i) + "] (" + blk.sigma + ", a=" + std::to_string(blk.a) +
           ", x=" + blk.x.str() + ") ";
    switch (blk.pairing) {
      case PairingKind::SelfPairedSymplectic:
        out += "self-paired symplectic";
        break;
      case PairingKind::SelfPairedOrthogonal:
        out += "self-paired orthogonal";
        break;
      case PairingKind::IsotropicPartner:
        out += "isotropic with [" + std::to_string(blk.partner) + "]";
        break;
    }
    out += "\n";
  }
  return out;
}

CommandResult cmd_check(const Session& s) {
  std::string out;
  bool any_fail = false;
  bool any_inadmissible = false;
  const auto render = [&](const std::string& label, const ValidationReport& report) {
    out += label + ": " + (report.ok() ? "ok" : "FAIL") + "\n";
    for (const std::string& v : report.violations) out += "  - " + v + "\n";
    any_fail = any_fail || !report.ok();
    any_inadmissible = any_inadmissible || report.inadmissible;
  };
  render("param", s.param_report);
  for (const auto& [name, sym] : s.table.symbols()) {
    render("jord rho=" + name, validate_jord(s.e, name, s.table, s.form));
  }
  for (const auto& [name, sym] : s.table.symbols()) {
    render("consistency rho=" + name, consistency_check(s.e, name, s.table, s.form, s.flags));
  }
  out += std::string("check: ") + (any_fail ? "FAIL" : "ok") + "\n";
  return {out, any_fail ? (any_inadmissible ? 2 : 1) : 0};
}

}  // namespace

Session load(std::istream& table_in, std::istream& param_in, const GroupForm& form,
             const O2nFlags& flags) {
  Session s;
  s.form = form;
  s.flags = flags;
  s.table.register_symbols(parse_symbol_lines(table_in));
  s.param = parse_param_lines(param_in, s.table);
  s.e = langlands_quotient(s.param);
  s.param_report = validate_param(s.param, s.table, form);
  return s;
}

CommandResult run(Session& session, const std::string& command,
                  const std::optional<std::string>& rho, const std::optional<Rational>& x,
                  const std::optional<std::string>& style,
                  const std::vector<std::string>& rest) {
  try {
    if (command == "check") return cmd_check(session);
    if (command == "reconstruct") return {cmd_reconstruct(rest), 0};

    static const std::set<std::string> known = {"support", "aparam", "lparam", "jord",
                                                "red",     "norm",   "lgroup"};
    if (!known.count(command)) {
      throw calc_error(errc::unknown_command, "unknown command '" + command + "'");
    }
    if (!session.param_report.ok()) {
      std::string out = "parameter failed validation; only `check` runs on invalid input\n";
      for (const std::string& v : session.param_report.violations) out += "  - " + v + "\n";
      return {out, 1};
    }
    if (command == "support") return {cmd_support(session), 0};
    if (command == "aparam") return {cmd_aparam(session), 0};
    if (command == "lparam") return {cmd_lparam(session), 0};
    if (command == "jord") {
      return {cmd_jord(session, require_rho(rho, session.table), x.value_or(Rational(0))), 0};
    }
    if (command == "red") return {cmd_red(session, require_rho(rho, session.table)), 0};
    if (command == "norm") {
      if (!style) {
        throw calc_error(errc::validation_error, "norm requires --style <A|L>");
      }
      return {cmd_norm(session, require_rho(rho, session.table), *style), 0};
    }
    return {cmd_lgroup(session), 0};
  } catch (const calc_error& err) {
    return {std::string("error: ") + err.what() + "\n", err.exit_code()};
  }
}

}  // namespace cuspcalc

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cuspcalc/error.hpp"
#include "cuspcalc/session.hpp"

namespace {

cuspcalc::GroupKind parse_group(const std::string& name) {
  if (name == "sp") return cuspcalc::GroupKind::Sp;
  if (name == "so-odd") return cuspcalc::GroupKind::SOodd;
  return cuspcalc::GroupKind::Oeven;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for cuspidal parameters of classical p-adic groups"};
  app.require_subcommand(1);

  std::string table_path;
  std::string param_path;
  std::string group;
  long long n = 0;
  bool so_irreducible = true;
  app.add_option("table", table_path, "symbol table file")->required()->check(CLI::ExistingFile);
  app.add_option("param", param_path, "parameter file")->required()->check(CLI::ExistingFile);
  app.add_option("--group", group, "group kind")
      ->required()
      ->check(CLI::IsMember({"sp", "so-odd", "o-even"}));
  app.add_option("--n", n, "group rank")->required()->check(CLI::NonNegativeNumber);
  app.add_option("--so-irreducible", so_irreducible,
                 "whether the restriction to the special subgroup stays irreducible "
                 "(o-even only)");

  std::string rho;
  std::string x_str;
  std::string style;
  std::vector<std::string> values;
  for (const char* name : {"support", "aparam", "lparam", "lgroup", "check"}) {
    app.add_subcommand(name);
  }
  CLI::App* jord_cmd = app.add_subcommand("jord");
  jord_cmd->add_option("--rho", rho, "symbol name")->required();
  jord_cmd->add_option("--x", x_str, "twist exponent (default 0)");
  CLI::App* red_cmd = app.add_subcommand("red");
  red_cmd->add_option("--rho", rho, "symbol name")->required();
  CLI::App* norm_cmd = app.add_subcommand("norm");
  norm_cmd->add_option("--rho", rho, "symbol name")->required();
  norm_cmd->add_option("--style", style, "normalization style")
      ->required()
      ->check(CLI::IsMember({"A", "L"}));
  CLI::App* recon_cmd = app.add_subcommand("reconstruct");
  recon_cmd->add_option("values", values,
                        "reducibility points (read from stdin when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 1;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    std::optional<std::string> rho_opt;
    std::optional<cuspcalc::Rational> x_opt;
    std::optional<std::string> style_opt;
    if (sub->get_option_no_throw("--rho") && sub->count("--rho")) rho_opt = rho;
    if (sub->get_option_no_throw("--x") && sub->count("--x")) {
      x_opt = cuspcalc::Rational::parse(x_str);
    }
    if (sub->get_option_no_throw("--style") && sub->count("--style")) style_opt = style;

    std::ifstream table_in(table_path);
    std::ifstream param_in(param_path);
    cuspcalc::GroupForm form{parse_group(group), n};
    cuspcalc::O2nFlags flags{so_irreducible};
    cuspcalc::Session session = cuspcalc::load(table_in, param_in, form, flags);

    const cuspcalc::CommandResult result =
        cuspcalc::run(session, command, rho_opt, x_opt, style_opt, values);
    std::cout << result.text;
    return result.exit_code;
  } catch (const cuspcalc::calc_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.exit_code();
  }
}

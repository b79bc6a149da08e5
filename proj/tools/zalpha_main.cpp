#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zalpha/experiment.hpp"

using namespace zalpha;

int main(int argc, char** argv) {
  CLI::App app{
      "Constant estimation and isomorphism-witness toolkit for finite sections "
      "of twisted Hilbert spaces"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string format_str = "csv";
  std::vector<std::string> family_names;
  bool serial = false;

  auto add_output = [&](CLI::App* s) {
    s->add_option("--format", format_str, "report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--out", cfg.out, "report file path")->required();
  };
  auto add_numeric = [&](CLI::App* s) {
    s->add_option("--alpha", cfg.alpha, "centralizer parameter");
    s->add_option("--dims", cfg.dims, "comma-separated section dimensions")
        ->required()
        ->delimiter(',');
    s->add_option("--trials", cfg.trials, "Monte Carlo trials per dimension");
    s->add_option("--seed", cfg.seed, "RNG seed");
    s->add_option("--families", family_names,
                  "comma-separated input families: gaussian, flat, spike, geometric-decay")
        ->delimiter(',');
    s->add_flag("--serial", serial, "single-threaded execution");
    add_output(s);
  };

  CLI::App* qt = app.add_subcommand("qtriangle", "estimate the quasi-triangle constant");
  add_numeric(qt);
  CLI::App* ql =
      app.add_subcommand("qlinear", "estimate the centralizer quasi-linearity constant");
  add_numeric(ql);
  CLI::App* mu = app.add_subcommand("multiplier", "estimate the diagonal multiplier bound");
  add_numeric(mu);
  CLI::App* un =
      app.add_subcommand("unorm", "estimate the odd/even splitting operator norms");
  add_numeric(un);
  CLI::App* pe =
      app.add_subcommand("pelczynski", "derive a direct-sum isomorphism witness");
  pe->add_option("--budget", cfg.budget, "total expansion budget");
  pe->add_option("--in", cfg.in, "derivation problem JSON (default: the stock X/Y instance)");
  add_output(pe);
  CLI::App* ce = app.add_subcommand("certify", "verify a factorization certificate");
  ce->add_option("--in", cfg.in, "certificate JSON")->required();
  add_output(ce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (qt->parsed()) cfg.command = Command::qtriangle;
  else if (ql->parsed()) cfg.command = Command::qlinear;
  else if (mu->parsed()) cfg.command = Command::multiplier;
  else if (un->parsed()) cfg.command = Command::unorm;
  else if (pe->parsed()) cfg.command = Command::pelczynski;
  else cfg.command = Command::certify;

  try {
    cfg.format = format_from_name(format_str);
    if (!family_names.empty()) {
      cfg.families.clear();
      for (const std::string& f : family_names) cfg.families.push_back(family_from_name(f));
    }
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  cfg.exec = serial ? Execution::serial : Execution::parallel;
  return run_experiment(cfg, std::cerr);
}

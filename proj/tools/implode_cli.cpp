#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "implode/cli.hpp"

namespace {

const std::map<std::string, std::string> kCommandHelp = {
    {"rootsys", "root systems, Weyl groups and chambers"},
    {"arrangement", "hyperplane arrangements: flats, broad subsets, strata"},
    {"hypertoric", "universal hypertoric varieties and their moment maps"},
    {"quiver", "A_{n-1} quiver representations and the nilpotent cone"},
    {"contract", "SU(2)/SL(2) contraction, flows and invariants"},
    {"mt", "Moore-Tachikawa morphisms: composition and tensor products"},
    {"nahm", "Nahm equations: integration, residuals, symmetries"},
    {"verify", "run a property suite (or all) and report pass/fail"},
};

}  // namespace

int main(int argc, char** argv) {
  using implode::cli::RunConfig;
  CLI::App app{"Numerical toolkit for implosions, contractions and their moment maps"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string input, output, csv, family;
  int rank = 0;
  bool serial = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", input, "JSON input document");
    sub->add_option("--output,-o", output, "write the JSON result here instead of stdout");
    sub->add_option("--tol", cfg.tol, "tolerance override (positive)");
    sub->add_option("--seed", cfg.seed, "random seed")->default_val(implode::verify::kDefaultSeed);
  };

  for (const auto& [cmd, actions] : implode::cli::commands()) {
    auto* sub = app.add_subcommand(cmd, kCommandHelp.at(cmd));
    sub->require_subcommand(1);
    for (const auto& action : actions) {
      auto* leaf = sub->add_subcommand(action);
      add_common(leaf);
      if (cmd == "rootsys" || cmd == "arrangement" || cmd == "hypertoric") {
        leaf->add_option("--family", family, "root system family letter (A, B, C, G)");
        leaf->add_option("--rank", rank, "root system rank");
      }
      if (cmd == "mt" && action == "compose") leaf->add_option("--chain", input, "chain document (alias of --input)");
      if (cmd == "contract" && action == "ghflow") leaf->add_option("--csv", csv, "write the trajectory as CSV");
      if (cmd == "verify" || cmd == "arrangement") leaf->add_flag("--serial", serial, "use the serial reference path");
      leaf->callback([&cfg, cmd = cmd, action = action] {
        cfg.command = cmd;
        cfg.action = action;
      });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (!input.empty()) cfg.input = input;
  if (!output.empty()) cfg.output = output;
  if (!csv.empty()) cfg.csv = csv;
  if (!family.empty()) cfg.family = family;
  if (rank != 0) cfg.rank = rank;
  cfg.serial = serial;

  const auto outcome = implode::cli::dispatch(cfg);
  const std::string text = implode::cli::render(outcome.document);
  const bool is_error = outcome.document.contains("error");
  if (cfg.output && !is_error) {
    std::ofstream f(*cfg.output);
    if (!f) {
      std::cerr << "cannot write " << *cfg.output << "\n";
      return 2;
    }
    f << text;
  } else {
    (is_error ? std::cerr : std::cout) << text;
  }
  return outcome.status;
}

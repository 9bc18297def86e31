// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Batch front end: loads a JSON run configuration, executes the requested
// command deterministically from its seed, and writes CSV/JSON artifacts.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qrf/errors.hpp"
#include "qrf/experiments.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int jobs = -1;
};

void add_common_flags(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--config", flags.config, "path to the JSON run configuration")
      ->required();
  sub->add_option("--out", flags.out, "output directory (overrides config)");
  sub->add_option("--seed", flags.seed, "seed override (config seed otherwise)")
      ->each([&flags](const std::string&) { flags.seed_set = true; });
  sub->add_option("--jobs", flags.jobs, "worker threads (0 = hardware)");
}

int dispatch(const std::string& command, const CommonFlags& flags) {
  qrf::ExperimentConfig cfg;
  try {
    cfg = qrf::ExperimentConfig::from_json_file(flags.config);
  } catch (const qrf::SpecParseError& e) {
    std::cerr << "config error in field '" << e.field << "': " << e.what() << "\n";
    return 2;
  }
  if (cfg.command != command) {
    std::cerr << "config error in field 'command': config requests '" << cfg.command
              << "' but the '" << command << "' subcommand was invoked\n";
    return 2;
  }
  if (!flags.out.empty()) cfg.out_dir = flags.out;
  if (flags.seed_set) cfg.seed = flags.seed;
  if (flags.jobs >= 0) cfg.jobs = flags.jobs;
  return qrf::run_experiment(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum reference frame bound-audit toolkit"};
  app.require_subcommand(1);

  CommonFlags verify_flags, sweep_flags, props_flags, twirl_flags;
  CLI::App* verify =
      app.add_subcommand("verify-bounds", "randomized trade-off inequality audits");
  add_common_flags(verify, verify_flags);
  CLI::App* sweep =
      app.add_subcommand("sweep", "accuracy versus reference size sweep");
  add_common_flags(sweep, sweep_flags);
  CLI::App* props =
      app.add_subcommand("check-props", "structural property and fidelity audits");
  add_common_flags(props, props_flags);
  CLI::App* twirl =
      app.add_subcommand("twirl-audit", "group-average projection audits");
  add_common_flags(twirl, twirl_flags);

  std::string validate_config;
  CLI::App* validate =
      app.add_subcommand("validate", "dry-check a configuration without running");
  validate->add_option("--config", validate_config, "path to the JSON run configuration")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return dispatch("verify-bounds", verify_flags);
    if (sweep->parsed()) return dispatch("sweep", sweep_flags);
    if (props->parsed()) return dispatch("check-props", props_flags);
    if (twirl->parsed()) return dispatch("twirl-audit", twirl_flags);
    if (validate->parsed())
      return qrf::validate_config_file(validate_config, std::cout, std::cerr);
  } catch (const qrf::SpecParseError& e) {
    std::cerr << "config error in field '" << e.field << "': " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

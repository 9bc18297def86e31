// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QRF_EXPERIMENTS_HPP
#define QRF_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qrf/audits.hpp"

namespace qrf {

// Batch-run description loaded from a JSON config file.  Spec strings use
// the micro-grammars of the representation, channel, and reference-state
// parsers; `seed` must be present so no run ever depends on wall-clock.
struct ExperimentConfig {
  std::string command;          // verify-bounds | sweep | check-props | twirl-audit
  std::string group;            // optional "su2" | "u1" cross-check
  std::string system_rep;       // optional representation spec
  std::string reference_rep;    // optional representation spec
  std::string reference_state;  // optional state spec
  std::string target;           // optional channel spec
  std::vector<double> s_grid;
  std::vector<double> s0_grid;
  std::vector<std::string> directions;  // subset of {"x","y","z"}
  std::uint64_t seed = 0;
  double slack_tol = 1e-9;
  int configs = 200;
  int d_r_max = 6;
  int pair_trials = 500;
  int mc_samples = 10000;
  double l_max = 8.0;
  double sweep_s0 = 3.14159265358979323846;
  double budget_seconds = 0.0;  // 0 disables the budget
  int jobs = 0;
  std::string out_dir = "out";

  static ExperimentConfig from_json_file(const std::string& path);
};

// Exit codes: 0 success, 1 some inequality slack < -slack_tol, 2 config
// error, 3 numerical failure.  Writes CSV and summary.json under out_dir.
int run_experiment(const ExperimentConfig& config);

// Parses and dimension-checks a config without running; prints resolved
// specs to `out` and problems to `diagnostics`.  Returns 0 or 2.
int validate_config_file(const std::string& path, std::ostream& out,
                         std::ostream& diagnostics);

// Formats a double with 17 significant digits (CSV cells).
std::string csv_double(double v);

std::string bound_reports_csv(const std::vector<BoundReport>& reports);
std::string checks_csv(const std::vector<CheckRow>& rows);
std::string sweep_csv(const SweepResult& result);

}  // namespace qrf

#endif  // QRF_EXPERIMENTS_HPP

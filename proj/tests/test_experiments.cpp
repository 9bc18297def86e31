// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qrf/bounds.hpp"
#include "qrf/errors.hpp"
#include "qrf/experiments.hpp"

using namespace qrf;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/qrf_exp_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("config parsing requires command and seed") {
  const std::string no_seed =
      write_temp("noseed.json", R"({"command": "sweep", "l_max": 1})");
  try {
    ExperimentConfig::from_json_file(no_seed);
    FAIL("expected a parse error");
  } catch (const SpecParseError& e) {
    CHECK(e.field == "seed");
  }
  const std::string no_command = write_temp("nocmd.json", R"({"seed": 3})");
  try {
    ExperimentConfig::from_json_file(no_command);
    FAIL("expected a parse error");
  } catch (const SpecParseError& e) {
    CHECK(e.field == "command");
  }
}

TEST_CASE("config parsing rejects unknown commands and unknown keys") {
  const std::string bad_cmd =
      write_temp("badcmd.json", R"({"command": "explode", "seed": 1})");
  try {
    ExperimentConfig::from_json_file(bad_cmd);
    FAIL("expected a parse error");
  } catch (const SpecParseError& e) {
    CHECK(e.field == "command");
  }
  const std::string bad_key = write_temp(
      "badkey.json", R"({"command": "sweep", "seed": 1, "lmax": 2})");
  try {
    ExperimentConfig::from_json_file(bad_key);
    FAIL("expected a parse error");
  } catch (const SpecParseError& e) {
    CHECK(e.field == "lmax");
  }
}

TEST_CASE("config grids and directions default sensibly") {
  const std::string path = write_temp(
      "defaults.json", R"({"command": "verify-bounds", "seed": 9})");
  const ExperimentConfig cfg = ExperimentConfig::from_json_file(path);
  CHECK(cfg.s_grid.size() == 16);
  CHECK(cfg.s0_grid.size() == 16);
  CHECK(cfg.directions == std::vector<std::string>{"x", "y", "z"});
  CHECK(cfg.seed == 9);
  CHECK(cfg.slack_tol == doctest::Approx(1e-9));
}

TEST_CASE("config type errors name the offending field") {
  const std::string path = write_temp(
      "badgrid.json",
      R"({"command": "sweep", "seed": 1, "s_grid": ["pi"]})");
  try {
    ExperimentConfig::from_json_file(path);
    FAIL("expected a parse error");
  } catch (const SpecParseError& e) {
    CHECK(e.field == "s_grid");
  }
}

TEST_CASE("csv_double emits 17 significant digits that round-trip") {
  const double v = 0.1 + 0.2;
  const std::string s = csv_double(v);
  CHECK(std::stod(s) == v);
  CHECK(csv_double(2.0) == "2");
  CHECK(s.find("0.300000000000000") == 0);
}

TEST_CASE("bound report csv has a stable header and term columns") {
  BoundReport a;
  a.id = InequalityId::CommutatorTradeoff;
  a.lhs = 0.5;
  a.rhs = 1.0;
  a.slack = 0.5;
  a.terms = {{"s0", 1.0}, {"axis", 2.0}};
  BoundReport b;
  b.id = InequalityId::AxisSum;
  b.lhs = 0.0;
  b.rhs = 2.0;
  b.slack = 2.0;
  b.terms = {{"spin_l", 0.5}};
  const std::string csv = bound_reports_csv({a, b});
  std::istringstream lines(csv);
  std::string header, row_a, row_b;
  std::getline(lines, header);
  std::getline(lines, row_a);
  std::getline(lines, row_b);
  CHECK(header == "inequality_id,lhs,rhs,slack,axis,s0,spin_l");
  CHECK(row_a == "commutator_tradeoff,0.5,1,0.5,2,1,");
  CHECK(row_b == "axis_sum,0,2,2,,,0.5");
}

TEST_CASE("run_experiment writes artifacts and is byte-reproducible") {
  const std::string cfg = write_temp("sweeprun.json", R"({
    "command": "sweep", "seed": 5, "l_max": "1/2",
    "target": "unitary:rot-z:theta=1.0", "out_dir": "/tmp/qrf_exp_out_a"
  })");
  ExperimentConfig c1 = ExperimentConfig::from_json_file(cfg);
  CHECK(run_experiment(c1) == 0);
  ExperimentConfig c2 = c1;
  c2.out_dir = "/tmp/qrf_exp_out_b";
  CHECK(run_experiment(c2) == 0);
  const std::string csv_a = slurp("/tmp/qrf_exp_out_a/sweep.csv");
  const std::string csv_b = slurp("/tmp/qrf_exp_out_b/sweep.csv");
  CHECK(!csv_a.empty());
  CHECK(csv_a == csv_b);
  // Exactly one data row for l_max = 1/2.
  CHECK(std::count(csv_a.begin(), csv_a.end(), '\n') == 2);
  // The summary exists and names the command.
  const std::string summary = slurp("/tmp/qrf_exp_out_a/summary.json");
  CHECK(summary.find("\"command\": \"sweep\"") != std::string::npos);
}

TEST_CASE("run_experiment surfaces config errors as exit 2") {
  ExperimentConfig cfg;
  cfg.command = "sweep";
  cfg.seed = 1;
  cfg.target = "unitary:rot-w:theta=1";  // bad axis
  cfg.out_dir = "/tmp/qrf_exp_out_err";
  CHECK(run_experiment(cfg) == 2);
}

TEST_CASE("validate reports resolved specs for a consistent config") {
  const std::string cfg = write_temp("val_ok.json", R"({
    "command": "verify-bounds", "seed": 2, "group": "su2",
    "system": "su2:j=1/2", "reference": "su2:j=1",
    "reference_state": "coherent:l=1", "target": "depolarizing:p=0.5"
  })");
  std::ostringstream out, diag;
  CHECK(validate_config_file(cfg, out, diag) == 0);
  CHECK(diag.str().empty());
  CHECK(out.str().find("su2 dim 2") != std::string::npos);
  CHECK(out.str().find("su2 dim 3") != std::string::npos);
}

TEST_CASE("validate names both specs on a dimension clash") {
  const std::string cfg = write_temp("val_clash.json", R"({
    "command": "verify-bounds", "seed": 2,
    "system": "su2:j=1/2", "reference": "su2:j=1",
    "reference_state": "coherent:l=2"
  })");
  std::ostringstream out, diag;
  CHECK(validate_config_file(cfg, out, diag) == 2);
  CHECK(diag.str().find("coherent:l=2") != std::string::npos);
  CHECK(diag.str().find("su2:j=1") != std::string::npos);
}

TEST_CASE("validate rejects unknown commands with exit 2") {
  const std::string cfg =
      write_temp("val_cmd.json", R"({"command": "frobnicate", "seed": 1})");
  std::ostringstream out, diag;
  CHECK(validate_config_file(cfg, out, diag) == 2);
  CHECK(diag.str().find("command") != std::string::npos);
}

TEST_CASE("checks csv formats rows with boolean outcomes") {
  std::vector<CheckRow> rows = {{"twirl", "idempotence", 1e-14, 1e-10, true},
                                {"twirl", "mc_gap", 0.5, 0.1, false}};
  const std::string csv = checks_csv(rows);
  CHECK(csv.find("audit,check,value,threshold,pass\n") == 0);
  CHECK(csv.find("twirl,idempotence,") != std::string::npos);
  CHECK(csv.find(",true\n") != std::string::npos);
  CHECK(csv.find(",false\n") != std::string::npos);
}

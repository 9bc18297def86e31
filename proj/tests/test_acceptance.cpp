// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Release gate: every deliverable property of the library is re-verified here
// at full scale, one summary line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qrf/audits.hpp"
#include "qrf/channels.hpp"
#include "qrf/experiments.hpp"
#include "qrf/qubit_su2.hpp"
#include "qrf/reps.hpp"

using namespace qrf;

namespace {

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[acceptance] criterion %02d %s %s\n", criterion,
              pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), pattern, a, b, c);
  return buffer;
}

bool rows_pass(const AuditSummary& summary) {
  for (const auto& row : summary.checks)
    if (!row.pass) return false;
  return !summary.checks.empty();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

AuditOptions full_scale() {
  AuditOptions opt;
  opt.seed = 1;
  opt.configs = 200;
  opt.d_r_max = 6;
  opt.pair_trials = 500;
  opt.mc_samples = 10000;
  opt.l_max = 8.0;
  opt.slack_tol = 1e-9;
  opt.jobs = 0;
  return opt;
}

}  // namespace

TEST_CASE("criterion 01: randomized commutator trade-off audit") {
  const AuditSummary a = audit_commutator_tradeoff(full_scale());
  const bool enough = a.count >= 200L * 3 * 8 * 16;
  const bool slack_ok = a.min_slack >= -1e-9 && a.violations == 0;
  const bool time_ok = a.runtime_seconds <= 120.0;
  const bool pass = enough && slack_ok && time_ok;
  report(1, pass,
         fmt("mixed-and-pure references over 200 covariant composites: min slack "
             "%.3g >= -1e-9, %.1f s <= 120 s",
             a.min_slack, a.runtime_seconds) +
             (enough ? "" : " [too few reports]"));
  CHECK(enough);
  CHECK(slack_ok);
  CHECK(time_ok);
}

TEST_CASE("criterion 02: covariant targets commute with probe rotations") {
  AuditOptions opt = full_scale();
  const AuditSummary a = audit_covariant_lhs(opt);
  const bool pass = rows_pass(a) && a.pass;
  double worst = 0.0;
  for (const auto& row : a.checks) worst = std::max(worst, row.value);
  report(2, pass,
         fmt("max || [lambda(U_s0), U_s] || and residual %.3g <= 1e-10", worst));
  CHECK(pass);
}

TEST_CASE("criterion 03: corollary audits for general and unitary targets") {
  const AuditSummary a = audit_corollaries(full_scale());
  const bool pass = a.violations == 0 && a.min_slack >= -1e-9 && a.count > 0;
  report(3, pass,
         fmt("generator and unitary-target variants: %0.f reports, min slack "
             "%.3g >= -1e-9",
             double(a.count), a.min_slack));
  CHECK(pass);
}

TEST_CASE("criterion 04: commuting-pair uncertainty audit") {
  const AuditSummary a = audit_commuting_pairs(full_scale());
  const bool pass = a.count >= 500 && a.violations == 0 && a.min_slack >= -1e-9;
  report(4, pass,
         fmt("500 unital maps on commuting polynomial pairs: min slack %.3g >= -1e-9",
             a.min_slack));
  CHECK(pass);
}

TEST_CASE("criterion 05: structural propositions") {
  const AuditSummary a = audit_propositions(full_scale());
  const bool pass = rows_pass(a) && a.pass;
  double worst = 0.0;
  for (const auto& row : a.checks) worst = std::max(worst, row.value);
  report(5, pass,
         fmt("invariant mixtures are covariant and commutant conjugations are "
             "invariant: max residual %.3g <= 1e-9",
             worst));
  CHECK(pass);
}

TEST_CASE("criterion 06: exact twirl vs covariance, idempotence, Monte Carlo") {
  const AuditSummary a = audit_twirl(full_scale());
  const bool pass = rows_pass(a) && a.pass;
  double worst_structural = 0.0;
  bool mc_ok = true;
  for (const auto& row : a.checks) {
    if (row.check.find("mc_gap") != std::string::npos)
      mc_ok = mc_ok && row.pass;
    else
      worst_structural = std::max(worst_structural, row.value);
  }
  report(6, pass,
         fmt("covariance and idempotence residuals %.3g <= 1e-10", worst_structural) +
             (mc_ok ? ", Haar sampling within 3 standard errors"
                    : ", Monte Carlo cross-check FAILED"));
  CHECK(pass);
}

TEST_CASE("criterion 07: fidelity routes, self-fidelity, coherent decay") {
  const AuditSummary a = audit_fidelity(full_scale());
  const bool pass = rows_pass(a) && a.pass;
  double cross = 0.0, self = 0.0, decay = 0.0;
  for (const auto& row : a.checks) {
    if (row.check.find("crosscheck") != std::string::npos) cross = row.value;
    if (row.check.find("self") != std::string::npos) self = row.value;
    if (row.check.find("decay") != std::string::npos) decay = row.value;
  }
  report(7, pass,
         fmt("route gap %.3g <= 1e-9, self gap %.3g <= 1e-12, decay gap %.3g <= 1e-9",
             cross, self, decay));
  CHECK(pass);
}

TEST_CASE("criterion 08: speed-limit fidelity floor") {
  const AuditSummary a = audit_mt(full_scale());
  const bool pass = rows_pass(a) && a.pass;
  double worst = -1.0;
  for (const auto& row : a.checks) worst = std::max(worst, row.value);
  report(8, pass,
         fmt("max (cos(Delta s) - 1e-9 - F) = %.3g <= 0 over all admissible grids",
             worst));
  CHECK(pass);
}

TEST_CASE("criterion 09: qubit suite across reference spins") {
  const AuditSummary a = audit_qubit_suite(full_scale());
  const bool pass = a.pass && a.min_slack >= -1e-9 && rows_pass(a);
  report(9, pass,
         fmt("triples, summed bound, variance sandwich, contraction-angle relation "
             "for l = 1/2..8: min slack %.3g >= -1e-9",
             a.min_slack));
  CHECK(pass);
}

TEST_CASE("criterion 10: reference-size sweep accuracy trend") {
  const QuantumChannel target = QuantumChannel::unitary(
      Representation::spin(0.5).unitary_at(LieDirection::su2_axis(2), 1.0));
  const auto t0 = std::chrono::steady_clock::now();
  const SweepResult result = sweep_reference(target, 8.0, M_PI, 0.0);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const SweepTrend trend = evaluate_sweep_trend(result, 1e-9);
  const bool rows_ok = result.rows.size() == 16 && !result.partial;
  const bool shrinks = trend.shrinks && trend.eps_last < trend.eps_first;
  const bool product_ok = trend.min_product_gap >= -1e-9 && trend.min_slack >= -1e-9;
  const bool time_ok = elapsed <= 180.0;
  const bool pass = rows_ok && shrinks && product_ok && time_ok;
  report(10, pass,
         fmt("eps shrinks %.4f -> %.4f, min dissipativity-product gap %.3g >= -1e-9",
             trend.eps_first, trend.eps_last, trend.min_product_gap) +
             fmt(", %.1f s <= 180 s", elapsed));
  CHECK(rows_ok);
  CHECK(shrinks);
  CHECK(product_ok);
  CHECK(time_ok);
}

TEST_CASE("criterion 11: byte-identical reruns for every command") {
  namespace fs = std::filesystem;
  struct Job {
    const char* name;
    std::string config_json;
  };
  const std::vector<Job> jobs = {
      {"sweep",
       R"({"command": "sweep", "seed": 5, "l_max": 3, "target": "unitary:rot-z:theta=1.0"})"},
      {"verify-bounds",
       R"({"command": "verify-bounds", "seed": 6, "configs": 6, "d_r_max": 4})"},
      {"check-props",
       R"({"command": "check-props", "seed": 7, "configs": 20, "pair_trials": 25, "l_max": 2})"},
      {"twirl-audit", R"({"command": "twirl-audit", "seed": 8, "mc_samples": 500})"},
  };
  bool all_identical = true;
  std::string failed;
  for (const auto& job : jobs) {
    const std::string cfg_path =
        std::string("/tmp/qrf_accept_") + job.name + ".json";
    std::ofstream(cfg_path) << job.config_json;
    std::vector<std::string> outs = {std::string("/tmp/qrf_accept_") + job.name + "_1",
                                     std::string("/tmp/qrf_accept_") + job.name + "_2"};
    for (const auto& out : outs) {
      fs::remove_all(out);
      ExperimentConfig cfg = ExperimentConfig::from_json_file(cfg_path);
      cfg.out_dir = out;
      const int code = run_experiment(cfg);
      if (code != 0) {
        all_identical = false;
        failed = std::string(job.name) + " exited " + std::to_string(code);
      }
    }
    if (!all_identical) break;
    // Every CSV artifact must match byte for byte.
    bool found_csv = false;
    for (const auto& entry : fs::directory_iterator(outs[0])) {
      if (entry.path().extension() != ".csv") continue;
      found_csv = true;
      const std::string twin = outs[1] + "/" + entry.path().filename().string();
      if (slurp(entry.path()) != slurp(twin) || slurp(entry.path()).empty()) {
        all_identical = false;
        failed = std::string(job.name) + ": " + entry.path().filename().string();
      }
    }
    if (!found_csv) {
      all_identical = false;
      failed = std::string(job.name) + ": no CSV written";
    }
    if (!all_identical) break;
  }
  report(11, all_identical,
         all_identical
             ? "sweep, verify-bounds, check-props, twirl-audit each rerun byte-identically"
             : "mismatch at " + failed);
  CHECK(all_identical);
}

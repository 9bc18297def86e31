// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QRF_AUDITS_HPP
#define QRF_AUDITS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qrf/bounds.hpp"
#include "qrf/qubit_su2.hpp"

namespace qrf {

struct AuditOptions {
  std::uint64_t seed = 1;
  int configs = 200;        // randomized trade-off configurations
  int d_r_max = 6;          // largest reference dimension in ensembles
  int pair_trials = 500;    // commuting-pair trials
  int mc_samples = 10000;   // Monte Carlo twirl samples
  double l_max = 8.0;       // largest reference spin in the qubit suite
  double slack_tol = 1e-9;  // allowed negative slack
  int jobs = 0;             // worker threads, 0 = hardware
  bool keep_reports = false;
};

// One named scalar check, CSV-friendly.
struct CheckRow {
  std::string audit;
  std::string check;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct AuditSummary {
  std::string name;
  long count = 0;              // evaluated instances
  double min_slack = 0.0;      // over all inequality reports
  double max_violation = 0.0;  // largest residual/deviation found
  long violations = 0;
  bool pass = false;
  double runtime_seconds = 0.0;
  std::vector<BoundReport> reports;  // populated when keep_reports
  std::vector<CheckRow> checks;
};

// Randomized mixed-term commutator trade-off audit: covariant composite
// channels on qubit (x) reference, pure and mixed references, all axes and
// grid parameters.
AuditSummary audit_commutator_tradeoff(const AuditOptions& options);

// Covariant targets commute with the evolution they track: max over the
// grid of || [lambda(U_{s0}), U_s] ||.
AuditSummary audit_covariant_lhs(const AuditOptions& options);

// Sharpened unitary-target forms plus the generator-weighted forms.
AuditSummary audit_corollaries(const AuditOptions& options);

// Commuting-pair uncertainty audit over random unital maps applied to
// polynomials of a shared Hermitian.
AuditSummary audit_commuting_pairs(const AuditOptions& options);

// (a) mixtures of commutant-unitary conjugations have covariance residual
// ~ 0; (b) single commutant-unitary conjugations have invariance residual
// ~ 0 on reducible representations.
AuditSummary audit_propositions(const AuditOptions& options);

// Twirl output covariance, idempotence, and Monte Carlo agreement across a
// spread of representations.
AuditSummary audit_twirl(const AuditOptions& options);

// Fidelity closed form vs trace-norm cross-check, self-fidelity, and the
// coherent-state overlap decay.
AuditSummary audit_fidelity(const AuditOptions& options);

// Fidelity never falls below cos(stddev * s) on admissible grids for the
// suite's reference states.
AuditSummary audit_mt(const AuditOptions& options);

// Qubit suite: triple and summed bounds for twirled z-rotation targets
// against spin-l coherent references, the variance sandwich, and the
// rotation-contraction relation for well-fitted channels.
AuditSummary audit_qubit_suite(const AuditOptions& options);

struct SweepTrend {
  double eps_first = 0.0;
  double eps_last = 0.0;
  double min_product_gap = 0.0;  // min of dissipativity*sqrt(l(l+1)) - lhs_sum/2
  double min_slack = 0.0;        // min slack over every per-axis and summed row bound
  bool shrinks = false;
  bool product_ok = false;
};

SweepTrend evaluate_sweep_trend(const SweepResult& result, double slack_tol);

}  // namespace qrf

#endif  // QRF_AUDITS_HPP

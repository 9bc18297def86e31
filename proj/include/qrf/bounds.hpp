// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QRF_BOUNDS_HPP
#define QRF_BOUNDS_HPP

#include <map>
#include <string>
#include <vector>

#include "qrf/channels.hpp"
#include "qrf/frames.hpp"
#include "qrf/linalg.hpp"

namespace qrf {

enum class InequalityId {
  CommutatorTradeoff,
  CommutatorTradeoffUnitary,
  GeneratorTradeoff,
  GeneratorTradeoffUnitary,
  CommutingPairUncertainty,
  AxisTriple,
  AxisSum,
};

std::string inequality_name(InequalityId id);

// One evaluated inequality instance: lhs <= rhs with slack = rhs - lhs and
// the named intermediate quantities that entered the right-hand side.
struct BoundReport {
  InequalityId id = InequalityId::CommutatorTradeoff;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::map<std::string, double> terms;
};

// Uhlmann fidelity tr sqrt(sqrt(rho0) rho1 sqrt(rho0)), clamped to [0,1].
double fidelity(const ComplexMatrix& rho0, const ComplexMatrix& rho1);

// Maximal-purification-overlap form || sqrt(rho0) sqrt(rho1) ||_1; agrees
// with fidelity() and serves as its independent cross-check.
double fidelity_trace_norm_crosscheck(const ComplexMatrix& rho0,
                                      const ComplexMatrix& rho1);

// Equivalent form || sqrt(rho) U sqrt(rho) ||_1 for the pair (rho, U rho U^dag).
double fidelity_evolved_crosscheck(const ComplexMatrix& rho, const ComplexMatrix& u);

// sqrt(1/F^2 - 1) for F the fidelity between the reference state and its
// group translate at parameter s; +infinity once F falls below 2e-10.
double asymmetry_factor(const CompositeFrame& frame, const LieDirection& direction,
                        double s);

// Standard deviation sqrt(<L^2> - <L>^2); tiny negative variances clip to
// zero and increment a queryable counter.
double stddev(const ComplexMatrix& rho, const ComplexMatrix& l);
long stddev_clip_count();
void reset_stddev_clip_count();

// Fidelity lower bound cos(stddev(rho, l) * s), valid on [0, pi/2].
double mt_lower_bound(const ComplexMatrix& rho, const ComplexMatrix& l, double s);

// Evaluates the trade-off inequalities for one covariant composite channel,
// one frame, and one target system channel.
class BoundEvaluator {
 public:
  BoundEvaluator(QuantumChannel phi, CompositeFrame frame, QuantumChannel lambda,
                 double covariance_tol = 1e-8, bool check_covariance = true);

  const QuantumChannel& restricted() const { return restricted_; }
  DiscrepancyReport epsilon(const LieDirection& direction, double s0) const;

  // || [lambda(U_{s0}), U_s] || against the mixed-term bound.
  BoundReport commutator_bound(const LieDirection& direction, double s0, double s) const;
  // Same left side with the sharpened right side for unitary targets.
  BoundReport commutator_bound_unitary(const LieDirection& direction, double s0,
                                       double s) const;
  // || [lambda(U_{s0}), L_S] || against the generator-weighted bound.
  BoundReport generator_bound(const LieDirection& direction, double s0) const;
  BoundReport generator_bound_unitary(const LieDirection& direction, double s0) const;

 private:
  QuantumChannel phi_;
  CompositeFrame frame_;
  QuantumChannel lambda_;
  QuantumChannel restricted_;
};

// Commutator bound for maps applied to a commuting operator pair:
// || [ch(A), ch(B)] || against the two-sided defect product bound.
// Requires || [A, B] || <= 1e-10.
BoundReport commuting_pair_bound(const QuantumChannel& ch, const ComplexMatrix& a,
                                 const ComplexMatrix& b);

// Right-hand sides as pure functions of their scalar ingredients, exposed
// for monotonicity checks.
double commutator_rhs(double unitary_gap, double eps_norm, double asym,
                      double defect_left, double defect_right);
double commutator_rhs_unitary(double unitary_gap, double eps_norm, double asym);
double generator_rhs(double gen_norm, double eps_norm, double delta,
                     double defect_left, double defect_right);
double generator_rhs_unitary(double gen_norm, double eps_norm, double delta);

// Evolution-parameter grid for bound audits: k*pi/8, k=1..16.
std::vector<double> default_bound_grid();

}  // namespace qrf

#endif  // QRF_BOUNDS_HPP

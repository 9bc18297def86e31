// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrf/bounds.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <utility>

#include <Eigen/Eigenvalues>

#include "qrf/errors.hpp"

namespace qrf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::atomic<long> g_stddev_clips{0};

void require_state(const ComplexMatrix& rho, const char* what) {
  require_square(rho, what);
  const double scale = rho.cwiseAbs().maxCoeff();
  require_hermitian(rho, 1e-8 * (1.0 + scale), what);
  if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8)
    throw PreconditionError(std::string(what) + " trace differs from one");
}

double axis_code(const LieDirection& dir) {
  if (dir.group == Group::U1) return -1.0;
  const Eigen::Vector3d& c = dir.coefficients;
  for (int k = 0; k < 3; ++k)
    if (std::abs(c(k) - 1.0) < 1e-12 && c.cwiseAbs().sum() < 1.0 + 1e-12)
      return double(k);
  return 3.0;  // generic direction
}

}  // namespace

std::string inequality_name(InequalityId id) {
  switch (id) {
    case InequalityId::CommutatorTradeoff:
      return "commutator_tradeoff";
    case InequalityId::CommutatorTradeoffUnitary:
      return "commutator_tradeoff_unitary";
    case InequalityId::GeneratorTradeoff:
      return "generator_tradeoff";
    case InequalityId::GeneratorTradeoffUnitary:
      return "generator_tradeoff_unitary";
    case InequalityId::CommutingPairUncertainty:
      return "commuting_pair_uncertainty";
    case InequalityId::AxisTriple:
      return "axis_triple";
    case InequalityId::AxisSum:
      return "axis_sum";
  }
  throw RangeError("unknown inequality id");
}

double fidelity(const ComplexMatrix& rho0, const ComplexMatrix& rho1) {
  require_state(rho0, "state");
  require_state(rho1, "state");
  if (rho0.rows() != rho1.rows()) throw DimensionError("state dimensions differ");
  const ComplexMatrix root0 = herm_sqrt(rho0);
  ComplexMatrix inner = root0 * rho1 * root0;
  inner = 0.5 * (inner + inner.adjoint().eval());
  const double f = herm_sqrt(inner).trace().real();
  return std::min(1.0, std::max(0.0, f));
}

double fidelity_trace_norm_crosscheck(const ComplexMatrix& rho0,
                                      const ComplexMatrix& rho1) {
  require_state(rho0, "state");
  require_state(rho1, "state");
  if (rho0.rows() != rho1.rows()) throw DimensionError("state dimensions differ");
  const double f = trace_norm(herm_sqrt(rho0) * herm_sqrt(rho1));
  return std::min(1.0, std::max(0.0, f));
}

double fidelity_evolved_crosscheck(const ComplexMatrix& rho, const ComplexMatrix& u) {
  require_state(rho, "state");
  require_square(u, "unitary");
  if (u.rows() != rho.rows()) throw DimensionError("unitary dimension differs from state");
  const ComplexMatrix root = herm_sqrt(rho);
  const double f = trace_norm(root * u * root);
  return std::min(1.0, std::max(0.0, f));
}

double asymmetry_factor(const CompositeFrame& frame, const LieDirection& direction,
                        double s) {
  const ComplexMatrix u_r = frame.rep_r().unitary_at(direction, s);
  const ComplexMatrix evolved = u_r * frame.rho_r() * u_r.adjoint();
  const double f = fidelity(frame.rho_r(), evolved);
  if (f <= 2e-10) return kInf;
  return std::sqrt(1.0 / (f * f) - 1.0);
}

double stddev(const ComplexMatrix& rho, const ComplexMatrix& l) {
  require_state(rho, "state");
  require_square(l, "observable");
  if (l.rows() != rho.rows()) throw DimensionError("observable dimension differs from state");
  const double mean = (rho * l).trace().real();
  const double second = (rho * l * l).trace().real();
  double var = second - mean * mean;
  if (var < 0.0) {
    g_stddev_clips.fetch_add(1, std::memory_order_relaxed);
    var = 0.0;
  }
  return std::sqrt(var);
}

long stddev_clip_count() { return g_stddev_clips.load(std::memory_order_relaxed); }

void reset_stddev_clip_count() { g_stddev_clips.store(0, std::memory_order_relaxed); }

double mt_lower_bound(const ComplexMatrix& rho, const ComplexMatrix& l, double s) {
  const double x = stddev(rho, l) * s;
  if (x < -1e-12 || x > M_PI / 2.0 + 1e-12)
    throw RangeError("evolution angle outside [0, pi/2]");
  return std::cos(std::min(M_PI / 2.0, std::max(0.0, x)));
}

double commutator_rhs(double unitary_gap, double eps_norm, double asym,
                      double defect_left, double defect_right) {
  if (std::isinf(asym)) return kInf;
  return 2.0 * unitary_gap * eps_norm +
         asym * (std::sqrt(defect_left + 2.0 * eps_norm) +
                 std::sqrt(defect_right + 2.0 * eps_norm));
}

double commutator_rhs_unitary(double unitary_gap, double eps_norm, double asym) {
  if (std::isinf(asym)) return kInf;
  return 2.0 * unitary_gap * eps_norm + 2.0 * asym * std::sqrt(eps_norm);
}

double generator_rhs(double gen_norm, double eps_norm, double delta,
                     double defect_left, double defect_right) {
  return 2.0 * gen_norm * eps_norm +
         delta * (std::sqrt(defect_left + 2.0 * eps_norm) +
                  std::sqrt(defect_right + 2.0 * eps_norm));
}

double generator_rhs_unitary(double gen_norm, double eps_norm, double delta) {
  return 2.0 * gen_norm * eps_norm + 2.0 * std::sqrt(2.0) * delta * std::sqrt(eps_norm);
}

BoundEvaluator::BoundEvaluator(QuantumChannel phi, CompositeFrame frame,
                               QuantumChannel lambda, double covariance_tol,
                               bool check_covariance)
    : phi_(std::move(phi)),
      frame_(std::move(frame)),
      lambda_(std::move(lambda)),
      restricted_(restrict_channel(phi_, frame_)) {
  if (phi_.dim() != frame_.dim_sr())
    throw DimensionError("composite channel dimension does not match frame");
  if (lambda_.dim() != frame_.dim_s())
    throw DimensionError("target channel dimension does not match system");
  if (check_covariance) {
    const double residual =
        covariance_residual(phi_, frame_.rep_sr(), default_residual_grid(),
                            default_directions(frame_.rep_sr().group()));
    if (residual > covariance_tol)
      throw PreconditionError("composite channel is not covariant within tolerance");
  }
}

DiscrepancyReport BoundEvaluator::epsilon(const LieDirection& direction, double s0) const {
  const ComplexMatrix u0 = frame_.rep_s().unitary_at(direction, s0);
  DiscrepancyReport report;
  report.matrix = restricted_.apply(u0) - lambda_.apply(u0);
  report.norm = op_norm(report.matrix);
  report.direction = direction;
  report.s0 = s0;
  return report;
}

BoundReport BoundEvaluator::commutator_bound(const LieDirection& direction, double s0,
                                             double s) const {
  const Eigen::Index d = frame_.dim_s();
  const ComplexMatrix u0 = frame_.rep_s().unitary_at(direction, s0);
  const ComplexMatrix us = frame_.rep_s().unitary_at(direction, s);
  const ComplexMatrix lu0 = lambda_.apply(u0);
  const ComplexMatrix id = identity_matrix(d);

  const double eps = op_norm(restricted_.apply(u0) - lu0);
  const double d_left = op_norm(id - lu0.adjoint() * lu0);
  const double d_right = op_norm(id - lu0 * lu0.adjoint());
  const double f = fidelity(
      frame_.rho_r(), frame_.rep_r().unitary_at(direction, s) * frame_.rho_r() *
                          frame_.rep_r().unitary_at(direction, s).adjoint());
  const double asym = f <= 2e-10 ? kInf : std::sqrt(1.0 / (f * f) - 1.0);
  const double gap = op_norm(us - id);

  BoundReport report;
  report.id = InequalityId::CommutatorTradeoff;
  report.lhs = op_norm(commutator(lu0, us));
  report.rhs = commutator_rhs(gap, eps, asym, d_left, d_right);
  report.slack = report.rhs - report.lhs;
  report.terms = {{"epsilon_norm", eps},   {"asymmetry_factor", asym},
                  {"fidelity", f},         {"defect_left", d_left},
                  {"defect_right", d_right}, {"unitary_gap", gap},
                  {"s0", s0},              {"s", s},
                  {"axis", axis_code(direction)}};
  return report;
}

BoundReport BoundEvaluator::commutator_bound_unitary(const LieDirection& direction,
                                                     double s0, double s) const {
  if (!lambda_.is_unitary())
    throw PreconditionError("target channel is not a unitary conjugation");
  BoundReport report = commutator_bound(direction, s0, s);
  report.id = InequalityId::CommutatorTradeoffUnitary;
  const double eps = report.terms.at("epsilon_norm");
  const double asym = report.terms.at("asymmetry_factor");
  const double gap = report.terms.at("unitary_gap");
  report.rhs = commutator_rhs_unitary(gap, eps, asym);
  report.slack = report.rhs - report.lhs;
  // Multiplicativity of unitary conjugation removes both defect terms.
  report.terms["defect_left"] = 0.0;
  report.terms["defect_right"] = 0.0;
  return report;
}

BoundReport BoundEvaluator::generator_bound(const LieDirection& direction,
                                            double s0) const {
  const Eigen::Index d = frame_.dim_s();
  const ComplexMatrix u0 = frame_.rep_s().unitary_at(direction, s0);
  const ComplexMatrix l_s = frame_.rep_s().lie_operator(direction);
  const ComplexMatrix lu0 = lambda_.apply(u0);
  const ComplexMatrix id = identity_matrix(d);

  const double eps = op_norm(restricted_.apply(u0) - lu0);
  const double d_left = op_norm(id - lu0.adjoint() * lu0);
  const double d_right = op_norm(id - lu0 * lu0.adjoint());
  const double delta = stddev(frame_.rho_r(), frame_.rep_r().lie_operator(direction));
  const double gen_norm = op_norm(l_s);

  BoundReport report;
  report.id = InequalityId::GeneratorTradeoff;
  report.lhs = op_norm(commutator(lu0, l_s));
  report.rhs = generator_rhs(gen_norm, eps, delta, d_left, d_right);
  report.slack = report.rhs - report.lhs;
  report.terms = {{"epsilon_norm", eps},      {"stddev_reference", delta},
                  {"generator_norm", gen_norm}, {"defect_left", d_left},
                  {"defect_right", d_right},  {"s0", s0},
                  {"axis", axis_code(direction)}};
  return report;
}

BoundReport BoundEvaluator::generator_bound_unitary(const LieDirection& direction,
                                                    double s0) const {
  if (!lambda_.is_unitary())
    throw PreconditionError("target channel is not a unitary conjugation");
  BoundReport report = generator_bound(direction, s0);
  report.id = InequalityId::GeneratorTradeoffUnitary;
  const double eps = report.terms.at("epsilon_norm");
  const double delta = report.terms.at("stddev_reference");
  const double gen_norm = report.terms.at("generator_norm");
  report.rhs = generator_rhs_unitary(gen_norm, eps, delta);
  report.slack = report.rhs - report.lhs;
  report.terms["defect_left"] = 0.0;
  report.terms["defect_right"] = 0.0;
  return report;
}

BoundReport commuting_pair_bound(const QuantumChannel& ch, const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
  require_square(a, "operator");
  require_square(b, "operator");
  if (a.rows() != ch.dim() || b.rows() != ch.dim())
    throw DimensionError("operator dimension does not match channel");
  if (op_norm(commutator(a, b)) > 1e-10)
    throw PreconditionError("operators do not commute within tolerance");

  const ComplexMatrix ga = ch.apply(a), gb = ch.apply(b);
  const double da_left = std::sqrt(op_norm(ch.apply(a.adjoint() * a) - ga.adjoint() * ga));
  const double da_right = std::sqrt(op_norm(ch.apply(a * a.adjoint()) - ga * ga.adjoint()));
  const double db_left = std::sqrt(op_norm(ch.apply(b.adjoint() * b) - gb.adjoint() * gb));
  const double db_right = std::sqrt(op_norm(ch.apply(b * b.adjoint()) - gb * gb.adjoint()));

  BoundReport report;
  report.id = InequalityId::CommutingPairUncertainty;
  report.lhs = op_norm(commutator(ga, gb));
  report.rhs = da_left * db_right + da_right * db_left;
  report.slack = report.rhs - report.lhs;
  report.terms = {{"defect_a_left", da_left},
                  {"defect_a_right", da_right},
                  {"defect_b_left", db_left},
                  {"defect_b_right", db_right}};
  return report;
}

std::vector<double> default_bound_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 16; ++k) grid.push_back(double(k) * M_PI / 8.0);
  return grid;
}

}  // namespace qrf

// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrf/qubit_su2.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <utility>

#include <Eigen/Eigenvalues>

#include "qrf/errors.hpp"
#include "qrf/reps.hpp"

namespace qrf {

ComplexMatrix pauli_matrix(int k) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  switch (k) {
    case 0:
      m << 0, 1, 1, 0;
      return m;
    case 1:
      m << 0, -i, i, 0;
      return m;
    case 2:
      m << 1, 0, 0, -1;
      return m;
    default:
      throw RangeError("Pauli index must be 0, 1, or 2");
  }
}

ComplexMatrix spin_coherent(double l, const Eigen::Vector3d& direction) {
  const Representation rep = Representation::spin(l);
  const double norm = direction.norm();
  if (norm < 1e-12) throw RangeError("coherent-state direction must be nonzero");
  const Eigen::Vector3d n = direction / norm;
  const Eigen::Index d = rep.dim();
  ComplexVector top = ComplexVector::Zero(d);
  top(0) = Complex(1.0, 0.0);

  const Eigen::Vector3d z(0.0, 0.0, 1.0);
  const Eigen::Vector3d cross = z.cross(n);
  const double sin_t = cross.norm();
  const double cos_t = z.dot(n);
  ComplexVector psi;
  if (sin_t < 1e-14) {
    if (cos_t > 0.0) {
      psi = top;
    } else {
      // Antipodal: rotate by pi about x.
      psi = expi(rep.lie_operator(LieDirection::su2_axis(0)), -M_PI) * top;
    }
  } else {
    const Eigen::Vector3d axis = cross / sin_t;
    const double theta = std::atan2(sin_t, cos_t);
    psi = expi(rep.lie_operator(LieDirection::su2(axis(0), axis(1), axis(2))), -theta) *
          top;
  }
  return psi * psi.adjoint();
}

PauliTransfer pauli_transfer(const QuantumChannel& ch) {
  if (ch.dim() != 2) throw DimensionError("Pauli transfer needs a qubit channel");
  PauliTransfer pt;
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrix image = ch.apply(pauli_matrix(j));
    pt.t(j) = 0.5 * image.trace().real();
    for (int i = 0; i < 3; ++i)
      pt.transfer(i, j) = 0.5 * (pauli_matrix(i) * image).trace().real();
  }
  return pt;
}

namespace {

double clamp_unit(double x) { return std::min(1.0, std::max(-1.0, x)); }

// Best lambdas and squared residual for a fixed rotation angle.
double rz_fit_residual_sq(const Eigen::Matrix3d& t, double theta,
                          Eigen::Vector3d& lambdas) {
  const double c = std::cos(theta), s = std::sin(theta);
  lambdas(0) = clamp_unit(t(0, 0) * c + t(1, 0) * s);
  lambdas(1) = clamp_unit(-t(0, 1) * s + t(1, 1) * c);
  lambdas(2) = clamp_unit(t(2, 2));
  Eigen::Matrix3d model = Eigen::Matrix3d::Zero();
  model(0, 0) = lambdas(0) * c;
  model(1, 0) = lambdas(0) * s;
  model(0, 1) = -lambdas(1) * s;
  model(1, 1) = lambdas(1) * c;
  model(2, 2) = lambdas(2);
  return (t - model).squaredNorm();
}

}  // namespace

RzDiagFit fit_rz_diag(const PauliTransfer& pt) {
  const Eigen::Matrix3d& t = pt.transfer;
  Eigen::Vector3d lam;
  double best_theta = 0.0;
  double best_r2 = rz_fit_residual_sq(t, 0.0, lam);
  constexpr int kGrid = 720;
  for (int k = 1; k < kGrid; ++k) {
    const double theta = 2.0 * M_PI * double(k) / double(kGrid);
    const double r2 = rz_fit_residual_sq(t, theta, lam);
    if (r2 < best_r2) {
      best_r2 = r2;
      best_theta = theta;
    }
  }
  // Golden-section refinement around the best grid point.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_theta - 2.0 * M_PI / kGrid;
  double hi = best_theta + 2.0 * M_PI / kGrid;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = rz_fit_residual_sq(t, x1, lam), f2 = rz_fit_residual_sq(t, x2, lam);
  for (int it = 0; it < 90; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = rz_fit_residual_sq(t, x1, lam);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = rz_fit_residual_sq(t, x2, lam);
    }
  }
  double theta = 0.5 * (lo + hi);
  double r2 = rz_fit_residual_sq(t, theta, lam);
  if (best_r2 < r2) {
    theta = best_theta;
    r2 = rz_fit_residual_sq(t, theta, lam);
  }

  theta = std::fmod(theta, 2.0 * M_PI);
  if (theta < 0.0) theta += 2.0 * M_PI;
  // R_z(theta + pi) * diag(-l1, -l2, l3) is the same model; prefer the
  // branch with nonnegative planar contraction.
  if (lam(0) + lam(1) < 0.0) {
    theta = std::fmod(theta + M_PI, 2.0 * M_PI);
    r2 = rz_fit_residual_sq(t, theta, lam);
  }

  RzDiagFit fit;
  fit.theta = theta;
  fit.lambdas = lam;
  fit.residual = std::sqrt(std::max(0.0, r2));
  return fit;
}

std::vector<BoundReport> qubit_triple_check(const QuantumChannel& lambda,
                                            const CompositeFrame& frame) {
  if (lambda.dim() != 2 || frame.dim_s() != 2)
    throw DimensionError("axis triple needs a qubit system");
  const ComplexMatrix id = identity_matrix(2);
  std::vector<BoundReport> reports;
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrix sigma = pauli_matrix(j);
    const ComplexMatrix image = lambda.apply(sigma);
    const double dis = op_norm(id - image * image);
    const double delta =
        stddev(frame.rho_r(), frame.rep_r().lie_operator(LieDirection::su2_axis(j)));
    BoundReport report;
    report.id = InequalityId::AxisTriple;
    report.lhs = op_norm(commutator(image, 0.5 * sigma));
    report.rhs = 2.0 * delta * std::sqrt(dis);
    report.slack = report.rhs - report.lhs;
    report.terms = {{"axis", double(j)},
                    {"dissipativity", dis},
                    {"stddev_reference", delta},
                    {"lhs_full_pauli", op_norm(commutator(image, sigma))}};
    reports.push_back(std::move(report));
  }
  return reports;
}

BoundReport summed_bound_check(const QuantumChannel& lambda, double l) {
  if (lambda.dim() != 2) throw DimensionError("axis sum needs a qubit system");
  if (l < 0.0) throw RangeError("spin size must be nonnegative");
  const ComplexMatrix id = identity_matrix(2);
  double lhs = 0.0, dis_sum = 0.0;
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrix sigma = pauli_matrix(j);
    const ComplexMatrix image = lambda.apply(sigma);
    lhs += op_norm(commutator(image, sigma));
    dis_sum += op_norm(id - image * image);
  }
  BoundReport report;
  report.id = InequalityId::AxisSum;
  report.lhs = lhs;
  report.rhs = 2.0 * std::sqrt(l * (l + 1.0)) * std::sqrt(dis_sum);
  report.slack = report.rhs - report.lhs;
  report.terms = {{"dissipativity_sum", dis_sum},
                  {"spin_l", l},
                  {"casimir", l * (l + 1.0)}};
  return report;
}

BoundReport summed_bound_check(const QuantumChannel& lambda, const CompositeFrame& frame) {
  const auto l_opt = frame.rep_r().max_spin();
  if (!l_opt)
    throw PreconditionError("summed bound needs a reference with a spin grading");
  BoundReport report = summed_bound_check(lambda, *l_opt);
  double delta_sq = 0.0;
  for (int j = 0; j < 3; ++j) {
    const double d =
        stddev(frame.rho_r(), frame.rep_r().lie_operator(LieDirection::su2_axis(j)));
    delta_sq += d * d;
  }
  report.terms["delta_sq_sum"] = delta_sq;
  report.terms["sandwich_low"] = *l_opt;
  report.terms["sandwich_high"] = *l_opt * (*l_opt + 1.0);
  return report;
}

ComplexMatrix relational_unitary(const ComplexMatrix& u_target,
                                 const CompositeFrame& frame) {
  if (frame.dim_s() != 2 || frame.rep_s().group() != Group::SU2)
    throw DimensionError("relational construction needs a spin-1/2 system");
  require_square(u_target, "target unitary");
  if (u_target.rows() != 2) throw DimensionError("target unitary must act on the qubit");
  if (op_norm(u_target.adjoint() * u_target - identity_matrix(2)) > 1e-10)
    throw PreconditionError("target is not unitary");

  // Polarization axis of the reference state.
  Eigen::Vector3d pol;
  for (int k = 0; k < 3; ++k)
    pol(k) = (frame.rho_r() * frame.rep_r().generator(k)).trace().real();
  if (pol.norm() < 1e-10)
    throw PreconditionError("reference state carries no polarization axis");
  pol.normalize();

  // Eigenbasis of pol.sigma on the system qubit.
  ComplexMatrix n_sigma = ComplexMatrix::Zero(2, 2);
  for (int k = 0; k < 3; ++k) n_sigma += pol(k) * pauli_matrix(k);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(n_sigma);
  if (es.info() != Eigen::Success)
    throw NumericalError("polarization eigendecomposition failed");
  const ComplexVector v_minus = es.eigenvectors().col(0);
  const ComplexVector v_plus = es.eigenvectors().col(1);

  const Complex diag_plus = (v_plus.adjoint() * u_target * v_plus)(0);
  const Complex diag_minus = (v_minus.adjoint() * u_target * v_minus)(0);
  const Complex off = (v_plus.adjoint() * u_target * v_minus)(0);
  if (std::abs(off) > 1e-8)
    throw PreconditionError("target does not rotate about the reference polarization axis");
  Complex mu = std::conj(diag_plus) * diag_minus;
  const double mu_abs = std::abs(mu);
  if (mu_abs < 1e-12) throw NumericalError("degenerate sector phase");
  mu /= mu_abs;

  // Total-spin sectors of the composite representation.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> cas(frame.rep_sr().casimir());
  if (cas.info() != Eigen::Success)
    throw NumericalError("composite Casimir eigendecomposition failed");
  const Eigen::Index d = frame.dim_sr();
  std::map<long, ComplexMatrix> sector_projectors;  // keyed by 2j
  for (Eigen::Index n = 0; n < d; ++n) {
    const double c = cas.eigenvalues()(n);
    const double j = 0.5 * (-1.0 + std::sqrt(std::max(0.0, 1.0 + 4.0 * c)));
    const long key = std::llround(2.0 * j);
    if (std::abs(2.0 * j - double(key)) > 1e-6)
      throw NumericalError("composite spin is not a half-integer");
    auto [it, inserted] = sector_projectors.try_emplace(key, ComplexMatrix::Zero(d, d));
    it->second.noalias() +=
        cas.eigenvectors().col(n) * cas.eigenvectors().col(n).adjoint();
  }
  if (sector_projectors.size() == 1) return identity_matrix(d);
  if (sector_projectors.size() != 2)
    throw PreconditionError("reference representation must have at most two total-spin sectors");

  const ComplexMatrix& low = sector_projectors.begin()->second;
  const ComplexMatrix& high = sector_projectors.rbegin()->second;
  return high + mu * low;
}

namespace {

// Rotation axis of a 2x2 unitary, or +z when it is proportional to the
// identity.
Eigen::Vector3d rotation_axis(const ComplexMatrix& u) {
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const Complex root = std::sqrt(det);
  const ComplexMatrix b = u / root;  // in SU(2) up to overall sign
  Eigen::Vector3d v;
  for (int k = 0; k < 3; ++k) v(k) = 0.5 * (pauli_matrix(k) * b).trace().imag();
  if (v.norm() < 1e-12) return Eigen::Vector3d(0.0, 0.0, 1.0);
  return v.normalized();
}

}  // namespace

SweepResult sweep_reference(const QuantumChannel& target, double l_max, double s0,
                            double budget_seconds) {
  if (target.dim() != 2) throw DimensionError("sweep target must be a qubit channel");
  if (l_max < 0.5) throw RangeError("sweep needs l_max >= 1/2");
  const auto start = std::chrono::steady_clock::now();
  const Representation rep_s = Representation::spin(0.5);

  Eigen::Vector3d axis(0.0, 0.0, 1.0);
  if (target.is_unitary()) axis = rotation_axis(target.kraus().front());
  const LieDirection probe =
      LieDirection::su2(axis(0), axis(1), axis(2));

  SweepResult result;
  const int steps = int(std::llround(2.0 * l_max));
  for (int k = 1; k <= steps; ++k) {
    const double l = 0.5 * double(k);
    const CompositeFrame frame =
        CompositeFrame::make(rep_s, Representation::spin(l), spin_coherent(l, axis));

    QuantumChannel phi = QuantumChannel::identity_channel(frame.dim_sr());
    if (target.is_unitary()) {
      const ComplexMatrix w = relational_unitary(target.kraus().front(), frame);
      // Invariance of the construction, checked at the generator level.
      for (int g = 0; g < 3; ++g) {
        const ComplexMatrix& lg = frame.rep_sr().generator(g);
        if ((w * lg - lg * w).norm() > 1e-8 * (1.0 + lg.norm()))
          throw NumericalError("relational unitary fails to commute with the symmetry");
      }
      phi = QuantumChannel::unitary(w);
    } else {
      phi = twirl(extend_with_identity(target, frame.dim_r()), frame.rep_sr());
    }

    const QuantumChannel restricted = restrict_channel(phi, frame);
    const ComplexMatrix u0 = rep_s.unitary_at(probe, s0);
    const double eps = op_norm(restricted.apply(u0) - target.apply(u0));

    const auto triple = qubit_triple_check(restricted, frame);
    const BoundReport summed = summed_bound_check(restricted, frame);
    const PauliTransfer pt = pauli_transfer(restricted);
    const RzDiagFit fit = fit_rz_diag(pt);

    SweepRow row;
    row.l = l;
    row.n_qubits_equiv = std::llround(2.0 * l);
    row.eps_norm = eps;
    row.lhs_x = triple[0].lhs;
    row.rhs_x = triple[0].rhs;
    row.lhs_y = triple[1].lhs;
    row.rhs_y = triple[1].rhs;
    row.lhs_z = triple[2].lhs;
    row.rhs_z = triple[2].rhs;
    row.lhs_sum = summed.lhs;
    row.rhs_sum = summed.rhs;
    row.delta_sx = triple[0].terms.at("stddev_reference");
    row.delta_sy = triple[1].terms.at("stddev_reference");
    row.delta_sz = triple[2].terms.at("stddev_reference");
    {
      const ComplexMatrix quarter =
          frame.rep_r().unitary_at(LieDirection::su2_axis(0), M_PI / 2.0);
      row.fidelity_halfpi =
          fidelity(frame.rho_r(), quarter * frame.rho_r() * quarter.adjoint());
    }
    row.theta_fit = fit.theta;
    row.lambda_x = fit.lambdas(0);
    row.lambda_y = fit.lambdas(1);
    row.lambda_z = fit.lambdas(2);
    row.fit_residual = fit.residual;
    result.rows.push_back(row);

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0.0 && elapsed > budget_seconds && k < steps) {
      result.partial = true;
      break;
    }
  }
  result.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace qrf

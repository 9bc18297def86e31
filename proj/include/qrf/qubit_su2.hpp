// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QRF_QUBIT_SU2_HPP
#define QRF_QUBIT_SU2_HPP

#include <vector>

#include <Eigen/Dense>

#include "qrf/bounds.hpp"
#include "qrf/channels.hpp"
#include "qrf/frames.hpp"
#include "qrf/linalg.hpp"

namespace qrf {

// Pauli matrix sigma_k for k = 0 (x), 1 (y), 2 (z).
ComplexMatrix pauli_matrix(int k);

// Density matrix of the highest-weight spin-l state rotated so the spin
// expectation points along `direction`.
ComplexMatrix spin_coherent(double l, const Eigen::Vector3d& direction);

// Affine action of a qubit channel on the Pauli basis:
// ch(a0*1 + a.sigma) = (a0 + t.a)*1 + (T a).sigma.
struct PauliTransfer {
  Eigen::Vector3d t = Eigen::Vector3d::Zero();
  Eigen::Matrix3d transfer = Eigen::Matrix3d::Zero();
};

PauliTransfer pauli_transfer(const QuantumChannel& ch);

// Least-squares decomposition of a transfer matrix as a z-rotation times a
// diagonal contraction, T ~ R_z(theta) * diag(lambdas).
struct RzDiagFit {
  double theta = 0.0;
  Eigen::Vector3d lambdas = Eigen::Vector3d::Ones();
  double residual = 0.0;
};

RzDiagFit fit_rz_diag(const PauliTransfer& pt);

// Per-axis commutator bounds || [ch(sigma_j), sigma_j/2] || <=
// 2 * stddev(rho_R, S_j) * sqrt(|| 1 - ch(sigma_j)^2 ||), for j = x, y, z.
std::vector<BoundReport> qubit_triple_check(const QuantumChannel& lambda,
                                            const CompositeFrame& frame);

// Summed form: sum_j || [ch(sigma_j), sigma_j] || <=
// 2 sqrt(l(l+1)) * sqrt(sum_j || 1 - ch(sigma_j)^2 ||).
BoundReport summed_bound_check(const QuantumChannel& lambda, double l);
BoundReport summed_bound_check(const QuantumChannel& lambda, const CompositeFrame& frame);

// Invariant composite unitary imitating a system rotation by phasing the
// total-spin sectors: identity on the top sector, a relative phase drawn
// from the target on the bottom sector.  Requires the target to rotate
// about the reference polarization axis and at most two sectors.
ComplexMatrix relational_unitary(const ComplexMatrix& u_target,
                                 const CompositeFrame& frame);

struct SweepRow {
  double l = 0.0;
  long n_qubits_equiv = 0;
  double eps_norm = 0.0;
  double lhs_x = 0.0, rhs_x = 0.0;
  double lhs_y = 0.0, rhs_y = 0.0;
  double lhs_z = 0.0, rhs_z = 0.0;
  double lhs_sum = 0.0, rhs_sum = 0.0;
  double delta_sx = 0.0, delta_sy = 0.0, delta_sz = 0.0;
  double fidelity_halfpi = 0.0;
  double theta_fit = 0.0;
  double lambda_x = 0.0, lambda_y = 0.0, lambda_z = 0.0;
  double fit_residual = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool partial = false;
  double runtime_seconds = 0.0;
};

// Reference-size sweep: for l = 1/2, 1, ..., l_max builds a spin-l coherent
// reference aligned with the target rotation axis, realizes the target
// through an invariant composite channel, restricts it, and records the
// discrepancy norm at parameter s0 together with the axis bounds and the
// rotation-times-contraction fit.  A positive budget truncates the sweep
// once exceeded and marks the result partial.
SweepResult sweep_reference(const QuantumChannel& target, double l_max, double s0,
                            double budget_seconds);

}  // namespace qrf

#endif  // QRF_QUBIT_SU2_HPP

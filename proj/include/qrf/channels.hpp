// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QRF_CHANNELS_HPP
#define QRF_CHANNELS_HPP

#include <vector>

#include "qrf/linalg.hpp"
#include "qrf/random.hpp"
#include "qrf/reps.hpp"

namespace qrf {

// Superoperator matrix (on column-stacked vec) of X -> sum K_i^dag X K_i.
ComplexMatrix superop_from_kraus(const std::vector<ComplexMatrix>& kraus);

// Choi matrix C = (map (x) id) applied to the unnormalized maximally
// entangled projector; C[(p,i),(q,j)] = map(E_ij)(p,q).
ComplexMatrix choi_from_kraus(const std::vector<ComplexMatrix>& kraus);

ComplexMatrix choi_from_superop(const ComplexMatrix& s);
ComplexMatrix superop_from_choi(const ComplexMatrix& c);

// Superoperator of X -> U X U^dag.
ComplexMatrix conjugation_superop(const ComplexMatrix& u);

// Completely positive unital map in the Heisenberg picture, stored as
// Kraus operators with the Choi matrix cached at construction.
class QuantumChannel {
 public:
  // Validates unitality of sum K_i^dag K_i within 1e-10.
  static QuantumChannel from_kraus(std::vector<ComplexMatrix> kraus);

  // Eigendecomposes the Choi matrix, dropping eigenvalues below the PSD
  // tolerance; rejects eigenvalues below its negative.
  static QuantumChannel from_choi(const ComplexMatrix& choi);

  static QuantumChannel identity_channel(Eigen::Index dim);

  // Heisenberg conjugation X -> U^dag X U.
  static QuantumChannel unitary(const ComplexMatrix& u);

  // Qubit depolarizing map with transfer X -> p X + (1-p) tr(X)/2 * 1.
  static QuantumChannel depolarizing(double p);

  Eigen::Index dim() const { return dim_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const ComplexMatrix& choi() const { return choi_; }
  ComplexMatrix superoperator() const;
  ComplexMatrix apply(const ComplexMatrix& x) const;
  bool is_unitary(double tol = 1e-10) const;

 private:
  QuantumChannel(Eigen::Index dim, std::vector<ComplexMatrix> kraus,
                 ComplexMatrix choi);

  Eigen::Index dim_;
  std::vector<ComplexMatrix> kraus_;
  ComplexMatrix choi_;
};

// Max over sampled group elements g = e^{Ls} of the Frobenius norm of the
// superoperator commutation defect; upper-bounds every per-input defect
// || ch(U^dag X U) - U^dag ch(X) U || over unit matrix inputs X.
double covariance_residual(const QuantumChannel& ch, const Representation& rep,
                           const std::vector<double>& s_grid,
                           const std::vector<LieDirection>& directions);

// Max over sampled g of || ch(U(g)) - U(g) ||.
double invariance_residual(const QuantumChannel& ch, const Representation& rep,
                           const std::vector<double>& s_grid,
                           const std::vector<LieDirection>& directions);

// Frobenius norm of the commutators between the channel superoperator and
// the doubled generators; zero iff the channel is covariant.
double generator_covariance_defect(const QuantumChannel& ch,
                                   const Representation& rep);

// Haar average of g-conjugations of the channel, computed exactly as the
// orthogonal projection of the superoperator onto the fixed subspace of
// the doubled representation.
QuantumChannel twirl(const QuantumChannel& ch, const Representation& rep);

struct MonteCarloTwirl {
  ComplexMatrix superop_mean;
  Eigen::MatrixXd stderr_real;
  Eigen::MatrixXd stderr_imag;
  // 3-sigma aggregate allowance for a Frobenius-norm comparison.
  double frobenius_allowance(double sigmas = 3.0) const;
};

// Sample average of the twirl integrand; cross-validation oracle only.
MonteCarloTwirl mc_twirl_superop(const QuantumChannel& ch, const Representation& rep,
                                 int samples, SeedStream& rng);

// Operator-valued inner product ch(A^dag B) - ch(A)^dag ch(B).
ComplexMatrix op_inner(const QuantumChannel& ch, const ComplexMatrix& a,
                       const ComplexMatrix& b);

// The map (ch (x) id_{d_r}) on the composite space.
QuantumChannel extend_with_identity(const QuantumChannel& ch, Eigen::Index d_r);

// Operator norm of the superoperator difference.
double superop_distance(const QuantumChannel& a, const QuantumChannel& b);

// Group-element sampling grid for residual certification: k*pi/4, k=1..8.
std::vector<double> default_residual_grid();

}  // namespace qrf

#endif  // QRF_CHANNELS_HPP

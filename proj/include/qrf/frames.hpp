// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QRF_FRAMES_HPP
#define QRF_FRAMES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qrf/channels.hpp"
#include "qrf/linalg.hpp"
#include "qrf/reps.hpp"

namespace qrf {

// System and reference carrying the same symmetry, acting jointly through
// the product representation, with a fixed reference state.
class CompositeFrame {
 public:
  // Validates that rho_r is a state on the reference space.
  static CompositeFrame make(Representation rep_s, Representation rep_r,
                             ComplexMatrix rho_r);

  const Representation& rep_s() const { return rep_s_; }
  const Representation& rep_r() const { return rep_r_; }
  const Representation& rep_sr() const { return rep_sr_; }
  const ComplexMatrix& rho_r() const { return rho_r_; }
  Eigen::Index dim_s() const { return rep_s_.dim(); }
  Eigen::Index dim_r() const { return rep_r_.dim(); }
  Eigen::Index dim_sr() const { return rep_sr_.dim(); }

 private:
  CompositeFrame(Representation s, Representation r, Representation sr,
                 ComplexMatrix rho);

  Representation rep_s_;
  Representation rep_r_;
  Representation rep_sr_;
  ComplexMatrix rho_r_;
};

// Embeds a system operator as A (x) 1 on the composite space.
ComplexMatrix include_system(const ComplexMatrix& a, Eigen::Index d_r);

// Conditional expectation Tr_R[(1 (x) rho_R) X]: completely positive,
// unital, and a left inverse of include_system.
ComplexMatrix cond_exp(const ComplexMatrix& x, const CompositeFrame& frame);

// The effective system channel A -> cond_exp(phi(A (x) 1)); unital and
// completely positive whenever phi is.
QuantumChannel restrict_channel(const QuantumChannel& phi, const CompositeFrame& frame);

struct DiscrepancyReport {
  ComplexMatrix matrix;
  double norm = 0.0;
  LieDirection direction;
  double s0 = 0.0;
};

// Difference restrict(phi)(U_S(s0)) - lambda(U_S(s0)) between the frame-
// restricted channel and a target system channel, with its operator norm.
DiscrepancyReport epsilon_discrepancy(const QuantumChannel& phi,
                                      const CompositeFrame& frame,
                                      const QuantumChannel& lambda,
                                      const LieDirection& direction, double s0);

// Certified lower bound on sup_X ||a(X) - b(X)|| / ||X|| via candidate
// probes plus deterministic coordinate-ascent refinement.  Optionally seeds
// the candidate set with group unitaries of rep.
double channel_norm_lower_bound(const QuantumChannel& a, const QuantumChannel& b,
                                int restarts, std::uint64_t seed,
                                const Representation* rep = nullptr);

}  // namespace qrf

#endif  // QRF_FRAMES_HPP

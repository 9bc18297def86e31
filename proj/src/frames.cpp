// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrf/frames.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Eigenvalues>

#include "qrf/errors.hpp"

namespace qrf {

CompositeFrame::CompositeFrame(Representation s, Representation r, Representation sr,
                               ComplexMatrix rho)
    : rep_s_(std::move(s)),
      rep_r_(std::move(r)),
      rep_sr_(std::move(sr)),
      rho_r_(std::move(rho)) {}

CompositeFrame CompositeFrame::make(Representation rep_s, Representation rep_r,
                                    ComplexMatrix rho_r) {
  if (rep_s.group() != rep_r.group())
    throw PreconditionError("system and reference carry different symmetry groups");
  require_square(rho_r, "reference state");
  if (rho_r.rows() != rep_r.dim())
    throw DimensionError("reference state dimension does not match representation");
  const double scale = rho_r.cwiseAbs().maxCoeff();
  require_hermitian(rho_r, 1e-10 * (1.0 + scale), "reference state");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho_r);
  if (es.info() != Eigen::Success)
    throw NumericalError("reference state eigendecomposition failed");
  if (es.eigenvalues().minCoeff() < -psd_tolerance(scale))
    throw NotPsdError("reference state has a negative eigenvalue");
  if (std::abs(rho_r.trace().real() - 1.0) > 1e-10 ||
      std::abs(rho_r.trace().imag()) > 1e-10)
    throw PreconditionError("reference state trace differs from one");
  Representation rep_sr = Representation::tensor_pair(rep_s, rep_r);
  return CompositeFrame(std::move(rep_s), std::move(rep_r), std::move(rep_sr),
                        std::move(rho_r));
}

ComplexMatrix include_system(const ComplexMatrix& a, Eigen::Index d_r) {
  require_square(a, "system operator");
  if (d_r < 1) throw DimensionError("reference dimension must be positive");
  return kron(a, identity_matrix(d_r));
}

ComplexMatrix cond_exp(const ComplexMatrix& x, const CompositeFrame& frame) {
  require_square(x, "composite operator");
  const Eigen::Index d_s = frame.dim_s(), d_r = frame.dim_r();
  if (x.rows() != d_s * d_r)
    throw DimensionError("composite operator dimension does not match frame");
  // Tr_R[(1 (x) rho) X] accumulated entrywise.
  ComplexMatrix out = ComplexMatrix::Zero(d_s, d_s);
  for (Eigen::Index a = 0; a < d_s; ++a)
    for (Eigen::Index b = 0; b < d_s; ++b) {
      Complex acc(0.0, 0.0);
      for (Eigen::Index r = 0; r < d_r; ++r)
        for (Eigen::Index v = 0; v < d_r; ++v)
          acc += frame.rho_r()(r, v) * x(a * d_r + v, b * d_r + r);
      out(a, b) = acc;
    }
  return out;
}

QuantumChannel restrict_channel(const QuantumChannel& phi, const CompositeFrame& frame) {
  const Eigen::Index d_s = frame.dim_s(), d_r = frame.dim_r();
  const Eigen::Index d = d_s * d_r;
  if (phi.dim() != d)
    throw DimensionError("channel dimension does not match composite frame");

  // vec-level factors of A -> cond_exp(phi(A (x) 1)).
  ComplexMatrix embed = ComplexMatrix::Zero(d * d, d_s * d_s);
  for (Eigen::Index a = 0; a < d_s; ++a)
    for (Eigen::Index b = 0; b < d_s; ++b)
      for (Eigen::Index r = 0; r < d_r; ++r)
        embed((b * d_r + r) * d + a * d_r + r, b * d_s + a) = Complex(1.0, 0.0);

  ComplexMatrix project = ComplexMatrix::Zero(d_s * d_s, d * d);
  for (Eigen::Index a = 0; a < d_s; ++a)
    for (Eigen::Index b = 0; b < d_s; ++b)
      for (Eigen::Index r = 0; r < d_r; ++r)
        for (Eigen::Index v = 0; v < d_r; ++v)
          project(b * d_s + a, (b * d_r + r) * d + a * d_r + v) +=
              frame.rho_r()(r, v);

  const ComplexMatrix s_rest = project * phi.superoperator() * embed;
  return QuantumChannel::from_choi(choi_from_superop(s_rest));
}

DiscrepancyReport epsilon_discrepancy(const QuantumChannel& phi,
                                      const CompositeFrame& frame,
                                      const QuantumChannel& lambda,
                                      const LieDirection& direction, double s0) {
  if (lambda.dim() != frame.dim_s())
    throw DimensionError("target channel dimension does not match system");
  const QuantumChannel restricted = restrict_channel(phi, frame);
  const ComplexMatrix u0 = frame.rep_s().unitary_at(direction, s0);
  DiscrepancyReport report;
  report.matrix = restricted.apply(u0) - lambda.apply(u0);
  report.norm = op_norm(report.matrix);
  report.direction = direction;
  report.s0 = s0;
  return report;
}

namespace {

double gap_ratio(const QuantumChannel& a, const QuantumChannel& b,
                 const ComplexMatrix& x) {
  const double denom = op_norm(x);
  if (denom < 1e-14) return 0.0;
  return op_norm(a.apply(x) - b.apply(x)) / denom;
}

double ascend(const QuantumChannel& a, const QuantumChannel& b, ComplexMatrix x) {
  double best = gap_ratio(a, b, x);
  const Eigen::Index d = x.rows();
  double step = 0.25 * std::max(1e-3, x.cwiseAbs().maxCoeff());
  for (int sweep = 0; sweep < 400 && step > 1e-9; ++sweep) {
    bool improved = false;
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index i = 0; i < d; ++i)
        for (int part = 0; part < 2; ++part) {
          const Complex delta = part == 0 ? Complex(step, 0.0) : Complex(0.0, step);
          for (int sgn = -1; sgn <= 1; sgn += 2) {
            ComplexMatrix trial = x;
            trial(i, j) += double(sgn) * delta;
            const double f = gap_ratio(a, b, trial);
            if (f > best * (1.0 + 1e-12) && f > best + 1e-15) {
              best = f;
              x = trial;
              improved = true;
            }
          }
        }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace

double channel_norm_lower_bound(const QuantumChannel& a, const QuantumChannel& b,
                                int restarts, std::uint64_t seed,
                                const Representation* rep) {
  if (a.dim() != b.dim()) throw DimensionError("channel dimensions differ");
  if (restarts < 0) throw RangeError("restart count must be nonnegative");
  const Eigen::Index d = a.dim();
  SeedStream rng(seed);

  std::vector<ComplexMatrix> candidates;
  for (Eigen::Index p = 0; p < d; ++p)
    for (Eigen::Index q = 0; q < d; ++q) {
      ComplexMatrix e = ComplexMatrix::Zero(d, d);
      e(p, q) = Complex(1.0, 0.0);
      candidates.push_back(std::move(e));
    }
  if (rep != nullptr && rep->dim() == d)
    for (const auto& dir : default_directions(rep->group()))
      for (int k = 1; k <= 8; ++k)
        candidates.push_back(rep->unitary_at(dir, double(k) * M_PI / 4.0));
  for (int r = 0; r < restarts; ++r) {
    switch (r % 3) {
      case 0:
        candidates.push_back(random_unitary(d, rng));
        break;
      case 1:
        candidates.push_back(random_hermitian(d, rng));
        break;
      default:
        candidates.push_back(random_ginibre(d, d, rng));
        break;
    }
  }

  std::vector<std::pair<double, size_t>> ranked;
  ranked.reserve(candidates.size());
  for (size_t n = 0; n < candidates.size(); ++n)
    ranked.emplace_back(gap_ratio(a, b, candidates[n]), n);
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& l, const auto& r) { return l.first > r.first; });

  double best = ranked.empty() ? 0.0 : ranked.front().first;
  const size_t refine = std::min<size_t>(3, ranked.size());
  for (size_t n = 0; n < refine; ++n)
    best = std::max(best, ascend(a, b, candidates[ranked[n].second]));
  return best;
}

}  // namespace qrf

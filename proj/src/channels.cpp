// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrf/channels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qrf/errors.hpp"

namespace qrf {

namespace {

void require_same_square(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) throw DimensionError("channel needs at least one Kraus operator");
  const Eigen::Index d = kraus.front().rows();
  for (const auto& k : kraus) {
    require_square(k, "Kraus operator");
    if (k.rows() != d) throw DimensionError("Kraus operators differ in dimension");
  }
}

}  // namespace

ComplexMatrix superop_from_kraus(const std::vector<ComplexMatrix>& kraus) {
  require_same_square(kraus);
  const Eigen::Index d = kraus.front().rows();
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  // vec(K^dag X K) = (K^T (x) K^dag) vec(X).
  for (const auto& k : kraus) s += kron(k.transpose(), k.adjoint());
  return s;
}

ComplexMatrix choi_from_kraus(const std::vector<ComplexMatrix>& kraus) {
  require_same_square(kraus);
  const Eigen::Index d = kraus.front().rows();
  ComplexMatrix c = ComplexMatrix::Zero(d * d, d * d);
  // map(E_ij) = sum_k K_k^dag E_ij K_k has (p,q) entry
  // sum_k conj(K_k(i,p)) K_k(j,q), so C = sum_k w_k w_k^dag with
  // w_k[(p,i)] = conj(K_k(i,p)).
  for (const auto& k : kraus) {
    ComplexVector w(d * d);
    for (Eigen::Index p = 0; p < d; ++p)
      for (Eigen::Index i = 0; i < d; ++i) w(p * d + i) = std::conj(k(i, p));
    c.noalias() += w * w.adjoint();
  }
  return c;
}

ComplexMatrix choi_from_superop(const ComplexMatrix& s) {
  require_square(s, "superoperator");
  const Eigen::Index d2 = s.rows();
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(d2))));
  if (d * d != d2) throw DimensionError("superoperator side is not a perfect square");
  ComplexMatrix c(d2, d2);
  // C[(p,i),(q,j)] = map(E_ij)(p,q) = S[(q,p),(j,i)].
  for (Eigen::Index p = 0; p < d; ++p)
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index q = 0; q < d; ++q)
        for (Eigen::Index j = 0; j < d; ++j)
          c(p * d + i, q * d + j) = s(q * d + p, j * d + i);
  return c;
}

ComplexMatrix superop_from_choi(const ComplexMatrix& c) {
  require_square(c, "Choi matrix");
  const Eigen::Index d2 = c.rows();
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(d2))));
  if (d * d != d2) throw DimensionError("Choi matrix side is not a perfect square");
  ComplexMatrix s(d2, d2);
  for (Eigen::Index x = 0; x < d; ++x)
    for (Eigen::Index y = 0; y < d; ++y)
      for (Eigen::Index u = 0; u < d; ++u)
        for (Eigen::Index v = 0; v < d; ++v)
          s(x * d + y, u * d + v) = c(y * d + v, x * d + u);
  return s;
}

ComplexMatrix conjugation_superop(const ComplexMatrix& u) {
  require_square(u, "unitary");
  return kron(u.conjugate(), u);
}

QuantumChannel::QuantumChannel(Eigen::Index dim, std::vector<ComplexMatrix> kraus,
                               ComplexMatrix choi)
    : dim_(dim), kraus_(std::move(kraus)), choi_(std::move(choi)) {}

QuantumChannel QuantumChannel::from_kraus(std::vector<ComplexMatrix> kraus) {
  require_same_square(kraus);
  const Eigen::Index d = kraus.front().rows();
  ComplexMatrix gram = ComplexMatrix::Zero(d, d);
  for (const auto& k : kraus) gram.noalias() += k.adjoint() * k;
  if (op_norm(gram - identity_matrix(d)) > 1e-10)
    throw UnitalityError("Kraus operators do not resolve the identity");
  ComplexMatrix choi = choi_from_kraus(kraus);
  return QuantumChannel(d, std::move(kraus), std::move(choi));
}

QuantumChannel QuantumChannel::from_choi(const ComplexMatrix& choi) {
  require_square(choi, "Choi matrix");
  const Eigen::Index d2 = choi.rows();
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(d2))));
  if (d * d != d2) throw DimensionError("Choi matrix side is not a perfect square");
  const double scale = choi.cwiseAbs().maxCoeff();
  require_hermitian(choi, 1e-10 * (1.0 + scale), "Choi matrix");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(choi);
  if (es.info() != Eigen::Success)
    throw NumericalError("Choi eigendecomposition failed");
  const Eigen::VectorXd evals = es.eigenvalues();
  const double lambda_max = std::max(0.0, evals.maxCoeff());
  const double tol = psd_tolerance(lambda_max);
  if (evals.minCoeff() < -tol)
    throw PositivityError("Choi matrix has a negative eigenvalue beyond tolerance");
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index r = d2 - 1; r >= 0; --r) {
    const double lambda = evals(r);
    if (lambda <= tol) continue;
    const ComplexVector w = std::sqrt(lambda) * es.eigenvectors().col(r);
    ComplexMatrix k(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index p = 0; p < d; ++p) k(i, p) = std::conj(w(p * d + i));
    kraus.push_back(std::move(k));
  }
  return from_kraus(std::move(kraus));
}

QuantumChannel QuantumChannel::identity_channel(Eigen::Index dim) {
  if (dim < 1) throw DimensionError("channel dimension must be positive");
  return from_kraus({identity_matrix(dim)});
}

QuantumChannel QuantumChannel::unitary(const ComplexMatrix& u) {
  require_square(u, "unitary");
  const Eigen::Index d = u.rows();
  if (op_norm(u.adjoint() * u - identity_matrix(d)) > 1e-10)
    throw PreconditionError("matrix is not unitary");
  return from_kraus({u});
}

QuantumChannel QuantumChannel::depolarizing(double p) {
  if (p < 0.0 || p > 1.0) throw RangeError("depolarizing parameter must lie in [0,1]");
  const Complex i(0.0, 1.0);
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, -i, i, 0;
  sz << 1, 0, 0, -1;
  const double c0 = std::sqrt((1.0 + 3.0 * p) / 4.0);
  const double c1 = std::sqrt((1.0 - p) / 4.0);
  std::vector<ComplexMatrix> kraus;
  kraus.push_back(c0 * identity_matrix(2));
  if (c1 > 0.0) {
    kraus.push_back(c1 * sx);
    kraus.push_back(c1 * sy);
    kraus.push_back(c1 * sz);
  }
  return from_kraus(std::move(kraus));
}

ComplexMatrix QuantumChannel::superoperator() const { return superop_from_kraus(kraus_); }

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_)
    throw DimensionError("operator dimension does not match channel");
  ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
  for (const auto& k : kraus_) out.noalias() += k.adjoint() * x * k;
  return out;
}

bool QuantumChannel::is_unitary(double tol) const {
  if (kraus_.size() != 1) return false;
  const ComplexMatrix& k = kraus_.front();
  return op_norm(k.adjoint() * k - identity_matrix(dim_)) <= tol;
}

namespace {

void require_channel_rep(const QuantumChannel& ch, const Representation& rep) {
  if (ch.dim() != rep.dim())
    throw DimensionError("channel and representation dimensions differ");
}

}  // namespace

double covariance_residual(const QuantumChannel& ch, const Representation& rep,
                           const std::vector<double>& s_grid,
                           const std::vector<LieDirection>& directions) {
  require_channel_rep(ch, rep);
  const ComplexMatrix s_op = ch.superoperator();
  double worst = 0.0;
  for (const auto& dir : directions) {
    for (double s : s_grid) {
      const ComplexMatrix u = rep.unitary_at(dir, s);
      // Superoperator of X -> U^dag X U.
      const ComplexMatrix w_dag = kron(u.transpose(), u.adjoint());
      // Frobenius norm of the commutation defect; column (b,a) is the vec of
      // ch(U^dag E_ab U) - U^dag ch(E_ab) U, so this upper-bounds every
      // per-input operator-norm defect.
      worst = std::max(worst, (s_op * w_dag - w_dag * s_op).norm());
    }
  }
  return worst;
}

double invariance_residual(const QuantumChannel& ch, const Representation& rep,
                           const std::vector<double>& s_grid,
                           const std::vector<LieDirection>& directions) {
  require_channel_rep(ch, rep);
  double worst = 0.0;
  for (const auto& dir : directions)
    for (double s : s_grid) {
      const ComplexMatrix u = rep.unitary_at(dir, s);
      worst = std::max(worst, op_norm(ch.apply(u) - u));
    }
  return worst;
}

double generator_covariance_defect(const QuantumChannel& ch, const Representation& rep) {
  require_channel_rep(ch, rep);
  const Eigen::Index d = ch.dim();
  const ComplexMatrix s_op = ch.superoperator();
  const ComplexMatrix id = identity_matrix(d);
  double worst = 0.0;
  for (const auto& l : rep.generators()) {
    const ComplexMatrix g = kron(-l.conjugate(), id) + kron(id, l);
    worst = std::max(worst, (s_op * g - g * s_op).norm());
  }
  return worst;
}

namespace {

struct IsotypicBlock {
  long twice_spin = 0;                   // 2J
  std::vector<ComplexMatrix> intertwiners;  // D^2 x (2J+1), orthonormal columns
};

// Decomposes the doubled representation on C^D (x) C^D into spin blocks by
// finding highest-weight vectors per weight cluster and lowering them.
std::vector<IsotypicBlock> su2_doubled_blocks(const std::vector<ComplexMatrix>& gens,
                                              Eigen::Index d) {
  const ComplexMatrix id = identity_matrix(d);
  const ComplexMatrix gx = kron(-gens[0].conjugate(), id) + kron(id, gens[0]);
  const ComplexMatrix gy = kron(-gens[1].conjugate(), id) + kron(id, gens[1]);
  const ComplexMatrix& lz = gens[2];
  const ComplexMatrix g_plus = gx + Complex(0.0, 1.0) * gy;
  const ComplexMatrix g_minus = g_plus.adjoint();

  // Weight of vec index v = j*d + i is Lz(i,i) - Lz(j,j); Lz is diagonal here.
  std::map<long, std::vector<Eigen::Index>, std::greater<long>> clusters;
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) {
      const double w = lz(i, i).real() - lz(j, j).real();
      const long key = std::llround(2.0 * w);
      if (std::abs(2.0 * w - double(key)) > 1e-6)
        throw NumericalError("weight is not a half-integer multiple");
      clusters[key].push_back(j * d + i);
    }

  std::vector<IsotypicBlock> blocks;
  Eigen::Index accounted = 0;
  for (const auto& [key, members] : clusters) {
    const auto cols = static_cast<Eigen::Index>(members.size());
    // Highest-weight vectors of weight key/2 are the null space of the
    // raising map restricted to this cluster.
    ComplexMatrix null_basis;
    auto above = clusters.find(key + 2);
    if (above == clusters.end()) {
      null_basis = ComplexMatrix::Identity(cols, cols);
    } else {
      const auto rows = static_cast<Eigen::Index>(above->second.size());
      ComplexMatrix a(rows, cols);
      for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
          a(r, c) = g_plus(above->second[size_t(r)], members[size_t(c)]);
      Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullV);
      const Eigen::VectorXd sv = svd.singularValues();
      const double cutoff = 1e-6 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
      Eigen::Index null_dim = cols;
      for (Eigen::Index r = 0; r < sv.size(); ++r)
        if (sv(r) > cutoff) --null_dim;
      null_basis = svd.matrixV().rightCols(null_dim);
    }
    if (null_basis.cols() == 0) continue;
    if (key < 0)
      throw NumericalError("highest-weight vector found at negative weight");

    IsotypicBlock block;
    block.twice_spin = key;
    const double spin = double(key) / 2.0;
    const auto width = static_cast<Eigen::Index>(key + 1);
    for (Eigen::Index n = 0; n < null_basis.cols(); ++n) {
      ComplexMatrix w = ComplexMatrix::Zero(d * d, width);
      ComplexVector top = ComplexVector::Zero(d * d);
      for (Eigen::Index c = 0; c < cols; ++c)
        top(members[size_t(c)]) = null_basis(c, n);
      w.col(0) = top;
      for (Eigen::Index step = 1; step < width; ++step) {
        const double m = spin - double(step - 1);
        const double norm_sq = spin * (spin + 1.0) - m * (m - 1.0);
        if (norm_sq <= 0.0) throw NumericalError("lowering chain terminated early");
        w.col(step) = (g_minus * w.col(step - 1)) / std::sqrt(norm_sq);
      }
      block.intertwiners.push_back(std::move(w));
      accounted += width;
    }
    blocks.push_back(std::move(block));
  }
  if (accounted != d * d)
    throw NumericalError("doubled representation decomposition is incomplete");
  return blocks;
}

ComplexMatrix su2_project_commutant(const ComplexMatrix& s_op,
                                    const std::vector<IsotypicBlock>& blocks,
                                    Eigen::Index d) {
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& block : blocks) {
    const auto width = static_cast<Eigen::Index>(block.twice_spin + 1);
    const auto mult = static_cast<Eigen::Index>(block.intertwiners.size());
    // Averaging the conjugated superoperator keeps, within each spin block,
    // the multiplicity-space component tr(W_a^dag S W_b)/width times the
    // partial isometry W_a W_b^dag.
    ComplexMatrix basis(d * d, mult * width);
    for (Eigen::Index a = 0; a < mult; ++a)
      basis.middleCols(a * width, width) = block.intertwiners[size_t(a)];
    ComplexMatrix s_basis = s_op * basis;
    ComplexMatrix coeff = ComplexMatrix::Zero(mult * width, mult * width);
    for (Eigen::Index a = 0; a < mult; ++a)
      for (Eigen::Index b = 0; b < mult; ++b) {
        const Complex t =
            (basis.middleCols(a * width, width).adjoint() *
             s_basis.middleCols(b * width, width))
                .trace() /
            double(width);
        coeff.block(a * width, b * width, width, width) =
            t * ComplexMatrix::Identity(width, width);
      }
    out.noalias() += basis * coeff * basis.adjoint();
  }
  return out;
}

}  // namespace

QuantumChannel twirl(const QuantumChannel& ch, const Representation& rep) {
  require_channel_rep(ch, rep);
  const Eigen::Index d = ch.dim();
  ComplexMatrix s_op = ch.superoperator();

  // Rotate to a basis where the diagonalizable generator is diagonal, so
  // vec indices carry definite weights.
  const ComplexMatrix& weight_gen =
      rep.group() == Group::SU2 ? rep.generator(2) : rep.generator(0);
  bool rotated = false;
  ComplexMatrix v_basis;
  std::vector<ComplexMatrix> gens = rep.generators();
  {
    ComplexMatrix off = weight_gen;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() > 1e-14) {
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(weight_gen);
      if (es.info() != Eigen::Success)
        throw NumericalError("weight generator eigendecomposition failed");
      v_basis = es.eigenvectors();
      rotated = true;
      const ComplexMatrix w_v = conjugation_superop(v_basis);
      s_op = w_v.adjoint() * s_op * w_v;
      for (auto& g : gens) g = v_basis.adjoint() * g * v_basis;
    }
  }

  ComplexMatrix averaged;
  if (rep.group() == Group::U1) {
    const ComplexMatrix& n_gen = gens[0];
    averaged = s_op;
    for (Eigen::Index col = 0; col < d * d; ++col) {
      const Eigen::Index ci = col % d, cj = col / d;
      const long wc = std::llround(n_gen(ci, ci).real() - n_gen(cj, cj).real());
      for (Eigen::Index row = 0; row < d * d; ++row) {
        const Eigen::Index ri = row % d, rj = row / d;
        const long wr = std::llround(n_gen(ri, ri).real() - n_gen(rj, rj).real());
        if (wr != wc) averaged(row, col) = Complex(0.0, 0.0);
      }
    }
  } else {
    averaged = su2_project_commutant(s_op, su2_doubled_blocks(gens, d), d);
  }

  if (rotated) {
    const ComplexMatrix w_v = conjugation_superop(v_basis);
    averaged = w_v * averaged * w_v.adjoint();
  }
  return QuantumChannel::from_choi(choi_from_superop(averaged));
}

double MonteCarloTwirl::frobenius_allowance(double sigmas) const {
  const double sum_sq = stderr_real.squaredNorm() + stderr_imag.squaredNorm();
  return sigmas * std::sqrt(sum_sq);
}

MonteCarloTwirl mc_twirl_superop(const QuantumChannel& ch, const Representation& rep,
                                 int samples, SeedStream& rng) {
  require_channel_rep(ch, rep);
  if (samples < 2) throw RangeError("Monte Carlo twirl needs at least two samples");
  const Eigen::Index d2 = ch.dim() * ch.dim();
  const ComplexMatrix s_op = ch.superoperator();
  ComplexMatrix mean = ComplexMatrix::Zero(d2, d2);
  Eigen::MatrixXd m2_re = Eigen::MatrixXd::Zero(d2, d2);
  Eigen::MatrixXd m2_im = Eigen::MatrixXd::Zero(d2, d2);
  for (int n = 0; n < samples; ++n) {
    const ComplexMatrix u = rep.haar_sample(rng);
    const ComplexMatrix w = conjugation_superop(u);
    const ComplexMatrix sample = w.adjoint() * s_op * w;
    mean += sample;
    m2_re += sample.real().cwiseAbs2();
    m2_im += sample.imag().cwiseAbs2();
  }
  mean /= double(samples);
  const double inv_n = 1.0 / double(samples);
  const double bessel = double(samples) / double(samples - 1);
  MonteCarloTwirl out;
  out.superop_mean = mean;
  out.stderr_real = ((m2_re * inv_n - mean.real().cwiseAbs2()) * bessel * inv_n)
                        .cwiseMax(0.0)
                        .cwiseSqrt();
  out.stderr_imag = ((m2_im * inv_n - mean.imag().cwiseAbs2()) * bessel * inv_n)
                        .cwiseMax(0.0)
                        .cwiseSqrt();
  return out;
}

ComplexMatrix op_inner(const QuantumChannel& ch, const ComplexMatrix& a,
                       const ComplexMatrix& b) {
  return ch.apply(a.adjoint() * b) - ch.apply(a).adjoint() * ch.apply(b);
}

QuantumChannel extend_with_identity(const QuantumChannel& ch, Eigen::Index d_r) {
  if (d_r < 1) throw DimensionError("identity factor dimension must be positive");
  const ComplexMatrix id = identity_matrix(d_r);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(ch.kraus().size());
  for (const auto& k : ch.kraus()) kraus.push_back(kron(k, id));
  return QuantumChannel::from_kraus(std::move(kraus));
}

double superop_distance(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.dim() != b.dim()) throw DimensionError("channel dimensions differ");
  return op_norm(a.superoperator() - b.superoperator());
}

std::vector<double> default_residual_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 8; ++k) grid.push_back(double(k) * M_PI / 4.0);
  return grid;
}

}  // namespace qrf

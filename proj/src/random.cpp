// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrf/random.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <numbers>

namespace qrf {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

SeedStream::SeedStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t SeedStream::next_u64() { return engine_(); }

double SeedStream::uniform() {
  // 53-bit mantissa in [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeedStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

SeedStream SeedStream::derive(std::uint64_t salt) const {
  return SeedStream(splitmix64(seed_ ^ (salt * 0x9E3779B97F4A7C15ULL)));
}

ComplexMatrix random_ginibre(Eigen::Index rows, Eigen::Index cols, SeedStream& rng) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  return g;
}

ComplexMatrix random_unitary(Eigen::Index n, SeedStream& rng) {
  const ComplexMatrix g = random_ginibre(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix phases so the distribution is exactly Haar.
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    const double a = std::abs(d);
    q.col(i) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
  }
  return q;
}

ComplexMatrix random_hermitian(Eigen::Index n, SeedStream& rng) {
  const ComplexMatrix g = random_ginibre(n, n, rng);
  return (g + g.adjoint()) / 2.0;
}

ComplexMatrix random_density(Eigen::Index n, Eigen::Index rank, SeedStream& rng) {
  const ComplexMatrix g = random_ginibre(n, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

std::vector<ComplexMatrix> random_unital_kraus(Eigen::Index n, int k, SeedStream& rng) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(k));
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < k; ++i) {
    blocks.push_back(random_ginibre(n, n, rng));
    sum += blocks.back().adjoint() * blocks.back();
  }
  // Right-normalize so that sum K^dag K = 1 exactly up to round-off.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sum);
  Eigen::VectorXd inv_roots(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    inv_roots(i) = 1.0 / std::sqrt(es.eigenvalues()(i));
  }
  const ComplexMatrix m_inv_half =
      es.eigenvectors() * inv_roots.asDiagonal() * es.eigenvectors().adjoint();
  for (auto& b : blocks) b = b * m_inv_half;
  return blocks;
}

}  // namespace qrf

// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QRF_RANDOM_HPP
#define QRF_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "qrf/linalg.hpp"

namespace qrf {

// Deterministic random stream. Gaussians come from an internal
// Box-Muller transform rather than std::normal_distribution so that
// sequences are identical across standard libraries.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform();   // [0, 1)
  double gaussian();  // standard normal

  // Independent child stream; `salt` distinguishes siblings.
  SeedStream derive(std::uint64_t salt) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Matrix with independent standard complex Gaussian entries.
ComplexMatrix random_ginibre(Eigen::Index rows, Eigen::Index cols, SeedStream& rng);

// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix random_unitary(Eigen::Index n, SeedStream& rng);

ComplexMatrix random_hermitian(Eigen::Index n, SeedStream& rng);

// Random density matrix of the given rank (GG^dag normalized).
ComplexMatrix random_density(Eigen::Index n, Eigen::Index rank, SeedStream& rng);

// Random Kraus family of k operators with sum K_i^dag K_i = 1.
std::vector<ComplexMatrix> random_unital_kraus(Eigen::Index n, int k, SeedStream& rng);

}  // namespace qrf

#endif  // QRF_RANDOM_HPP

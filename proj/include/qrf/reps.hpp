// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QRF_REPS_HPP
#define QRF_REPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qrf/linalg.hpp"
#include "qrf/random.hpp"

namespace qrf {

enum class Group { U1, SU2 };

std::string group_name(Group g);

// A direction in the Lie algebra, with unit-norm coefficient vector.
struct LieDirection {
  Group group = Group::SU2;
  Eigen::Vector3d coefficients = Eigen::Vector3d::UnitZ();  // length 1 used for U1

  static LieDirection su2(double x, double y, double z);
  static LieDirection su2_axis(int axis);  // 0 -> x, 1 -> y, 2 -> z
  static LieDirection u1();

  std::string label() const;
};

// Unitary representation of U(1) or SU(2): named Hermitian generators
// acting on a finite-dimensional space. Immutable after construction.
class Representation {
 public:
  static Representation spin(double j);
  static Representation u1(const std::vector<long>& charges);
  static Representation direct_sum(const std::vector<Representation>& parts);
  static Representation tensor_pair(const Representation& rep_s,
                                    const Representation& rep_r);
  static Representation qubit_power(int n);

  Group group() const { return group_; }
  Eigen::Index dim() const { return dim_; }
  const std::vector<ComplexMatrix>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const ComplexMatrix& generator(int k) const;

  // Largest spin among irreducible pieces, when tracked (SU(2) only).
  std::optional<double> max_spin() const { return max_spin_; }

  ComplexMatrix lie_operator(const LieDirection& dir) const;

  // e^{iLs} with L the generator along `dir`.
  ComplexMatrix unitary_at(const LieDirection& dir, double s) const;

  // Haar-distributed group element realized in this representation:
  // uniform quaternion for SU(2), uniform angle for U(1).
  ComplexMatrix haar_sample(SeedStream& rng) const;

  ComplexMatrix casimir() const;

  // Re-checks Hermiticity, commutation relations, and (SU(2)) that the
  // Casimir spectrum sits on half-integer j(j+1) values.
  void validate() const;

 private:
  Representation(Group g, std::vector<std::string> names,
                 std::vector<ComplexMatrix> gens, std::optional<double> max_spin);

  Group group_;
  Eigen::Index dim_;
  std::vector<std::string> names_;
  std::vector<ComplexMatrix> generators_;
  std::optional<double> max_spin_;
};

// x, y, z for SU(2); the single charge direction for U(1).
std::vector<LieDirection> default_directions(Group g);

}  // namespace qrf

#endif  // QRF_REPS_HPP

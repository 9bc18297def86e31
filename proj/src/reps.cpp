// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrf/reps.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace qrf {

std::string group_name(Group g) { return g == Group::U1 ? "u1" : "su2"; }

LieDirection LieDirection::su2(double x, double y, double z) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (norm <= 0.0) {
    throw RangeError("LieDirection: zero direction vector");
  }
  LieDirection d;
  d.group = Group::SU2;
  d.coefficients = Eigen::Vector3d(x / norm, y / norm, z / norm);
  return d;
}

LieDirection LieDirection::su2_axis(int axis) {
  switch (axis) {
    case 0: return su2(1, 0, 0);
    case 1: return su2(0, 1, 0);
    case 2: return su2(0, 0, 1);
    default: throw RangeError("LieDirection: axis index must be 0, 1, or 2");
  }
}

LieDirection LieDirection::u1() {
  LieDirection d;
  d.group = Group::U1;
  d.coefficients = Eigen::Vector3d(1, 0, 0);
  return d;
}

std::string LieDirection::label() const {
  if (group == Group::U1) return "n";
  if (coefficients == Eigen::Vector3d(1, 0, 0)) return "x";
  if (coefficients == Eigen::Vector3d(0, 1, 0)) return "y";
  if (coefficients == Eigen::Vector3d(0, 0, 1)) return "z";
  std::ostringstream os;
  os << "su2(" << coefficients(0) << "," << coefficients(1) << ","
     << coefficients(2) << ")";
  return os.str();
}

Representation::Representation(Group g, std::vector<std::string> names,
                               std::vector<ComplexMatrix> gens,
                               std::optional<double> max_spin)
    : group_(g),
      dim_(gens.empty() ? 0 : gens.front().rows()),
      names_(std::move(names)),
      generators_(std::move(gens)),
      max_spin_(max_spin) {
  validate();
}

Representation Representation::spin(double j) {
  const double two_j = 2.0 * j;
  const long r = std::lround(two_j);
  if (j < 0.0 || r < 0 || std::abs(two_j - static_cast<double>(r)) > 1e-9) {
    throw RangeError("spin: j must be a nonnegative half-integer");
  }
  const Eigen::Index n = r + 1;
  // Weight basis with m descending: index i carries m = j - i.
  ComplexMatrix sz = ComplexMatrix::Zero(n, n);
  ComplexMatrix sp = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double m = j - static_cast<double>(i);
    sz(i, i) = m;
    if (i > 0) {
      sp(i - 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
  }
  const ComplexMatrix sm = sp.adjoint();
  const ComplexMatrix sx = (sp + sm) / 2.0;
  const ComplexMatrix sy = (sp - sm) / Complex(0.0, 2.0);
  return Representation(Group::SU2, {"S_x", "S_y", "S_z"}, {sx, sy, sz}, j);
}

Representation Representation::u1(const std::vector<long>& charges) {
  if (charges.empty()) {
    throw RangeError("u1: charge list must be non-empty");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(charges.size());
  ComplexMatrix gen = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    gen(i, i) = static_cast<double>(charges[static_cast<std::size_t>(i)]);
  }
  return Representation(Group::U1, {"N"}, {gen}, std::nullopt);
}

Representation Representation::direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) {
    throw RangeError("direct_sum: at least one summand required");
  }
  const Group g = parts.front().group_;
  Eigen::Index dim = 0;
  for (const auto& p : parts) {
    if (p.group_ != g) {
      throw PreconditionError("direct_sum: summands mix groups");
    }
    dim += p.dim_;
  }
  const std::size_t n_gen = parts.front().generators_.size();
  std::vector<ComplexMatrix> gens(n_gen, ComplexMatrix::Zero(dim, dim));
  Eigen::Index offset = 0;
  std::optional<double> top;
  for (const auto& p : parts) {
    for (std::size_t k = 0; k < n_gen; ++k) {
      gens[k].block(offset, offset, p.dim_, p.dim_) = p.generators_[k];
    }
    offset += p.dim_;
    if (p.max_spin_) {
      top = top ? std::max(*top, *p.max_spin_) : *p.max_spin_;
    }
  }
  return Representation(g, parts.front().names_, std::move(gens), top);
}

Representation Representation::tensor_pair(const Representation& rep_s,
                                           const Representation& rep_r) {
  if (rep_s.group_ != rep_r.group_) {
    throw PreconditionError("tensor_pair: factors mix groups");
  }
  const ComplexMatrix id_s = identity_matrix(rep_s.dim_);
  const ComplexMatrix id_r = identity_matrix(rep_r.dim_);
  std::vector<ComplexMatrix> gens;
  gens.reserve(rep_s.generators_.size());
  for (std::size_t k = 0; k < rep_s.generators_.size(); ++k) {
    gens.push_back(kron(rep_s.generators_[k], id_r) +
                   kron(id_s, rep_r.generators_[k]));
  }
  std::optional<double> top;
  if (rep_s.max_spin_ && rep_r.max_spin_) {
    top = *rep_s.max_spin_ + *rep_r.max_spin_;
  }
  return Representation(rep_s.group_, rep_s.names_, std::move(gens), top);
}

Representation Representation::qubit_power(int n) {
  if (n < 1) {
    throw RangeError("qubit_power: need at least one qubit");
  }
  Representation rep = spin(0.5);
  for (int i = 1; i < n; ++i) {
    rep = tensor_pair(rep, spin(0.5));
  }
  return rep;
}

const ComplexMatrix& Representation::generator(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= generators_.size()) {
    throw RangeError("generator: index out of range");
  }
  return generators_[static_cast<std::size_t>(k)];
}

ComplexMatrix Representation::lie_operator(const LieDirection& dir) const {
  if (dir.group != group_) {
    throw DimensionError("lie_operator: direction is for a different group");
  }
  if (group_ == Group::U1) {
    return generators_[0];
  }
  return dir.coefficients(0) * generators_[0] +
         dir.coefficients(1) * generators_[1] +
         dir.coefficients(2) * generators_[2];
}

ComplexMatrix Representation::unitary_at(const LieDirection& dir, double s) const {
  return expi(lie_operator(dir), s);
}

ComplexMatrix Representation::haar_sample(SeedStream& rng) const {
  if (group_ == Group::U1) {
    // Haar measure on the circle is the uniform angle.
    return unitary_at(LieDirection::u1(), 2.0 * M_PI * rng.uniform());
  }
  // Uniform unit quaternion; (q0, v) maps to a rotation by 2*atan2(|v|, q0)
  // about v. This covers the double cover exactly once.
  double q0 = rng.gaussian();
  Eigen::Vector3d v(rng.gaussian(), rng.gaussian(), rng.gaussian());
  const double norm = std::sqrt(q0 * q0 + v.squaredNorm());
  q0 /= norm;
  v /= norm;
  const double v_len = v.norm();
  const double angle = 2.0 * std::atan2(v_len, q0);
  const LieDirection axis = (v_len > 1e-300)
                                ? LieDirection::su2(v(0), v(1), v(2))
                                : LieDirection::su2_axis(2);
  return unitary_at(axis, angle);
}

ComplexMatrix Representation::casimir() const {
  ComplexMatrix c = ComplexMatrix::Zero(dim_, dim_);
  for (const auto& g : generators_) {
    c += g * g;
  }
  return c;
}

void Representation::validate() const {
  if (generators_.empty() || dim_ == 0) {
    throw NumericalError("representation: no generators");
  }
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (generators_[k].rows() != dim_ || generators_[k].cols() != dim_) {
      throw DimensionError("representation: generator shape mismatch");
    }
    if (!is_hermitian(generators_[k], 1e-12 * (1.0 + generators_[k].cwiseAbs().maxCoeff()))) {
      throw NotHermitianError("representation: generator " + names_[k] +
                              " is not Hermitian");
    }
  }
  if (group_ == Group::SU2) {
    if (generators_.size() != 3) {
      throw NumericalError("representation: SU(2) needs three generators");
    }
    for (int k = 0; k < 3; ++k) {
      const int a = k, b = (k + 1) % 3, c = (k + 2) % 3;
      const ComplexMatrix defect =
          commutator(generators_[a], generators_[b]) - Complex(0, 1) * generators_[c];
      const double scale = 1.0 + generators_[c].cwiseAbs().maxCoeff();
      if (defect.cwiseAbs().maxCoeff() > 1e-10 * scale) {
        throw NumericalError("representation: su(2) commutation relations fail");
      }
    }
    // Casimir spectrum must sit on half-integer j(j+1) values.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(casimir());
    for (Eigen::Index i = 0; i < dim_; ++i) {
      const double c = es.eigenvalues()(i);
      const double j = (-1.0 + std::sqrt(1.0 + 4.0 * std::max(0.0, c))) / 2.0;
      const double j_round = std::lround(2.0 * j) / 2.0;
      if (j_round < 0.0 || std::abs(c - j_round * (j_round + 1.0)) > 1e-9 * (1.0 + c)) {
        throw NumericalError("representation: Casimir eigenvalue off the spin grid");
      }
    }
  } else if (generators_.size() != 1) {
    throw NumericalError("representation: U(1) needs one generator");
  }
}

std::vector<LieDirection> default_directions(Group g) {
  if (g == Group::U1) {
    return {LieDirection::u1()};
  }
  return {LieDirection::su2_axis(0), LieDirection::su2_axis(1),
          LieDirection::su2_axis(2)};
}

}  // namespace qrf

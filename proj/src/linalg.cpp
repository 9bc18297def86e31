// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrf/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <string>

namespace qrf {

ComplexMatrix identity_matrix(Eigen::Index n) {
  return ComplexMatrix::Identity(n, n);
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void require_hermitian(const ComplexMatrix& m, double tol, const char* what) {
  require_square(m, what);
  if (!is_hermitian(m, tol)) {
    throw NotHermitianError(std::string(what) + ": matrix is not Hermitian within " +
                            std::to_string(tol));
  }
}

double op_norm(const ComplexMatrix& m) {
  require_square(m, "op_norm");
  if (m.rows() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double trace_norm(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

ComplexMatrix herm_sqrt(const ComplexMatrix& h) {
  require_hermitian(h, 1e-10 * (1.0 + h.cwiseAbs().maxCoeff()), "herm_sqrt");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::VectorXd evals = es.eigenvalues();
  const double scale = evals.cwiseAbs().maxCoeff();
  const double tol = psd_tolerance(scale);
  // Eigenvalues of an exactly singular input come back as O(eps) noise; taking
  // their square root would inject O(sqrt(eps)) ~ 1e-8 errors, so anything below
  // a rank-revealing floor is treated as an exact zero.
  const double floor =
      32.0 * double(h.rows()) * std::numeric_limits<double>::epsilon() * scale;
  Eigen::VectorXd roots(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) < -tol) {
      throw NotPsdError("herm_sqrt: eigenvalue " + std::to_string(evals(i)) +
                        " below -" + std::to_string(tol));
    }
    roots(i) = evals(i) <= floor ? 0.0 : std::sqrt(evals(i));
  }
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix expi(const ComplexMatrix& h, double s) {
  require_hermitian(h, 1e-10 * (1.0 + h.cwiseAbs().maxCoeff()), "expi");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  ComplexVector phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, es.eigenvalues()(i) * s));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace_reference(const ComplexMatrix& x, Eigen::Index d_s,
                                      Eigen::Index d_r) {
  require_square(x, "partial_trace_reference");
  if (x.rows() != d_s * d_r) {
    throw DimensionError("partial_trace_reference: matrix dimension " +
                         std::to_string(x.rows()) + " is not " +
                         std::to_string(d_s) + "*" + std::to_string(d_r));
  }
  ComplexMatrix out = ComplexMatrix::Zero(d_s, d_s);
  for (Eigen::Index i = 0; i < d_s; ++i) {
    for (Eigen::Index j = 0; j < d_s; ++j) {
      Complex acc(0.0, 0.0);
      for (Eigen::Index r = 0; r < d_r; ++r) {
        acc += x(i * d_r + r, j * d_r + r);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "commutator");
  require_square(b, "commutator");
  if (a.rows() != b.rows()) {
    throw DimensionError("commutator: dimension mismatch " + std::to_string(a.rows()) +
                         " vs " + std::to_string(b.rows()));
  }
  return a * b - b * a;
}

ComplexVector vec(const ComplexMatrix& x) {
  // Eigen stores column-major, so a straight copy is column stacking.
  return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index d) {
  if (v.size() != d * d) {
    throw DimensionError("unvec: vector length " + std::to_string(v.size()) +
                         " is not " + std::to_string(d) + "^2");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionError("trace_of_product: shapes do not compose to a square");
  }
  return (a.transpose().cwiseProduct(b)).sum();
}

}  // namespace qrf

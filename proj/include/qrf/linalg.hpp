// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QRF_LINALG_HPP
#define QRF_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

#include "qrf/errors.hpp"

namespace qrf {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Scale-aware tolerance used for positive-semidefiniteness decisions.
inline double psd_tolerance(double scale) { return 1e-10 * (1.0 + scale); }

ComplexMatrix identity_matrix(Eigen::Index n);

void require_square(const ComplexMatrix& m, const char* what);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);
void require_hermitian(const ComplexMatrix& m, double tol, const char* what);

// Largest singular value. Rejects non-square input.
double op_norm(const ComplexMatrix& m);

// Sum of singular values. Accepts rectangular input.
double trace_norm(const ComplexMatrix& m);

// PSD square root through eigendecomposition. Eigenvalues in
// [-psd_tolerance(op_norm), 0) are clipped to zero; lower ones reject.
ComplexMatrix herm_sqrt(const ComplexMatrix& h);

// e^{iHs} for Hermitian H, through spectral decomposition.
ComplexMatrix expi(const ComplexMatrix& h, double s);

// Kronecker product; the first argument is the leading (system) slot.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Trace over the trailing (reference) slot of a d_s*d_r square matrix.
ComplexMatrix partial_trace_reference(const ComplexMatrix& x, Eigen::Index d_s,
                                      Eigen::Index d_r);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Column-stacking vectorization: vec(X)[j*d + i] = X(i, j).
ComplexVector vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index d);

// tr(a*b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qrf

#endif  // QRF_LINALG_HPP

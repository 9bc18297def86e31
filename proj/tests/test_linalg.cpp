// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qrf/errors.hpp"
#include "qrf/linalg.hpp"
#include "test_helpers.hpp"

using namespace qrf;
using qrf::test::frob_dist;

TEST_CASE("operator norm of a diagonal matrix is the largest magnitude") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = Complex(0.0, -4.0);
  CHECK(op_norm(m) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("trace norm sums singular values") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = Complex(0.0, -4.0);
  CHECK(trace_norm(m) == doctest::Approx(7.0).epsilon(1e-12));
  // Rectangular input is accepted.
  ComplexMatrix r(1, 2);
  r << 3.0, 4.0;
  CHECK(trace_norm(r) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("hermiticity predicate and guard") {
  CHECK(is_hermitian(qrf::test::sy()));
  ComplexMatrix m(2, 2);
  m << 1.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 1.0;  // symmetric, not Hermitian
  CHECK_FALSE(is_hermitian(m));
  CHECK_THROWS_AS(require_hermitian(m, 1e-10, "test"), NotHermitianError);
}

TEST_CASE("herm_sqrt squares back and rejects negative matrices") {
  ComplexMatrix h(2, 2);
  h << 2.0, Complex(0.0, 1.0), Complex(0.0, -1.0), 2.0;  // eigenvalues 1, 3
  const ComplexMatrix r = herm_sqrt(h);
  CHECK(frob_dist(r * r, h) < 1e-12);
  CHECK_THROWS_AS(herm_sqrt(ComplexMatrix(-identity_matrix(2))), NotPsdError);
}

TEST_CASE("herm_sqrt of an exactly singular projector has no noise floor leak") {
  // Rank-one projector: the sqrt is the projector itself, exactly.
  ComplexVector v(3);
  v << Complex(1, 1), Complex(0, 2), Complex(-1, 0.5);
  v.normalize();
  const ComplexMatrix p = v * v.adjoint();
  const ComplexMatrix r = herm_sqrt(p);
  CHECK(frob_dist(r, p) < 1e-13);
  CHECK(std::abs(r.trace().real() - 1.0) < 1e-13);
}

TEST_CASE("expi closed forms") {
  // exp(i sigma_x/2 * pi) = i sigma_x.
  const ComplexMatrix u = expi(0.5 * qrf::test::sx(), M_PI);
  CHECK(frob_dist(u, Complex(0, 1) * qrf::test::sx()) < 1e-12);
  // exp(i sigma_z s) = diag(e^{is}, e^{-is}).
  const double s = 0.37;
  const ComplexMatrix w = expi(qrf::test::sz(), s);
  CHECK(std::abs(w(0, 0) - std::exp(Complex(0, s))) < 1e-13);
  CHECK(std::abs(w(1, 1) - std::exp(Complex(0, -s))) < 1e-13);
  CHECK(std::abs(w(0, 1)) < 1e-13);
  // Unitarity.
  CHECK(frob_dist(w * w.adjoint(), identity_matrix(2)) < 1e-13);
}

TEST_CASE("kron uses the first argument as the leading slot") {
  ComplexMatrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 5, 6, 7;
  const ComplexMatrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  // (a (x) b)[(i1,i2),(j1,j2)] = a(i1,j1) b(i2,j2) with i2 fastest.
  CHECK(k(0, 1) == Complex(5));   // a(0,0) b(0,1)
  CHECK(k(0, 3) == Complex(10));  // a(0,1) b(0,1)
  CHECK(k(2, 0) == Complex(0));   // a(1,0) b(0,0)
  CHECK(k(3, 3) == Complex(28));  // a(1,1) b(1,1)
}

TEST_CASE("partial trace over the reference slot") {
  ComplexMatrix a(2, 2), b(3, 3);
  a << 1, Complex(0, 2), 3, 4;
  b.setZero();
  b(0, 0) = 1;
  b(1, 1) = 2;
  b(2, 2) = 3;
  b(0, 2) = Complex(0, 5);
  const ComplexMatrix x = kron(a, b);
  const ComplexMatrix reduced = partial_trace_reference(x, 2, 3);
  CHECK(frob_dist(reduced, 6.0 * a) < 1e-12);  // tr b = 6
}

TEST_CASE("partial trace of a correlated sum is linear") {
  ComplexMatrix a(2, 2), b(2, 2);
  a << 1, 0, 0, -1;
  b << 0, 1, 1, 0;
  const ComplexMatrix x = kron(a, identity_matrix(2)) + kron(b, qrf::test::sz());
  // tr(1) = 2 on the first piece, tr(sigma_z) = 0 on the second.
  CHECK(frob_dist(partial_trace_reference(x, 2, 2), 2.0 * a) < 1e-12);
}

TEST_CASE("vec and unvec are column-stacking inverses") {
  ComplexMatrix m(2, 3);
  m << 1, 2, 3, 4, 5, 6;
  const ComplexVector v = vec(m.block(0, 0, 2, 2));
  CHECK(v(0) == Complex(1));
  CHECK(v(1) == Complex(4));  // column 0 row 1
  CHECK(v(2) == Complex(2));  // column 1 row 0
  ComplexMatrix sq(2, 2);
  sq << 1, 2, 4, 5;
  CHECK(frob_dist(unvec(vec(sq), 2), sq) < 1e-15);
}

TEST_CASE("commutator and trace_of_product basics") {
  CHECK(frob_dist(commutator(qrf::test::sx(), qrf::test::sy()),
                  Complex(0, 2) * qrf::test::sz()) < 1e-13);
  ComplexMatrix a(2, 2), b(2, 2);
  a << 1, Complex(0, 1), 2, 0;
  b << 3, 1, Complex(0, -1), 4;
  CHECK(std::abs(trace_of_product(a, b) - (a * b).trace()) < 1e-13);
}

TEST_CASE("square guard rejects rectangular input") {
  CHECK_THROWS_AS(op_norm(ComplexMatrix::Zero(2, 3)), DimensionError);
}

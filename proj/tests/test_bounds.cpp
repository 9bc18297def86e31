// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "qrf/bounds.hpp"
#include "qrf/channels.hpp"
#include "qrf/errors.hpp"
#include "qrf/frames.hpp"
#include "qrf/linalg.hpp"
#include "qrf/qubit_su2.hpp"
#include "qrf/random.hpp"
#include "qrf/reps.hpp"
#include "test_helpers.hpp"

using namespace qrf;
using qrf::test::frob_dist;

TEST_CASE("fidelity closed forms on pure and classical states") {
  // Orthogonal pure states.
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  CHECK(fidelity(p0, p1) < 1e-12);
  // Pure against maximally mixed: sqrt(1/2).
  CHECK(fidelity(p0, ComplexMatrix(0.5 * identity_matrix(2))) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  // Commuting diagonal states: Bhattacharyya coefficient.
  ComplexMatrix d0 = ComplexMatrix::Zero(2, 2), d1 = ComplexMatrix::Zero(2, 2);
  d0(0, 0) = 0.7;
  d0(1, 1) = 0.3;
  d1(0, 0) = 0.2;
  d1(1, 1) = 0.8;
  const double expected = std::sqrt(0.7 * 0.2) + std::sqrt(0.3 * 0.8);
  CHECK(fidelity(d0, d1) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("fidelity is symmetric and exactly one on identical states") {
  SeedStream rng(61);
  for (int t = 0; t < 20; ++t) {
    const Eigen::Index d = 2 + t % 3;
    const ComplexMatrix a = random_density(d, 1 + t % d, rng);
    const ComplexMatrix b = random_density(d, d, rng);
    CHECK(std::abs(fidelity(a, b) - fidelity(b, a)) < 1e-11);
    CHECK(std::abs(fidelity(a, a) - 1.0) < 1e-12);
  }
}

TEST_CASE("two independent fidelity routes agree on random pairs") {
  SeedStream rng(62);
  double worst = 0.0;
  for (int t = 0; t < 60; ++t) {
    const Eigen::Index d = 2 + t % 4;
    const ComplexMatrix a = random_density(d, 1 + t % d, rng);
    const ComplexMatrix b = random_density(d, 1 + (t / 2) % d, rng);
    worst = std::max(worst,
                     std::abs(fidelity(a, b) - fidelity_trace_norm_crosscheck(a, b)));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("evolved-pair route matches the generic routes") {
  SeedStream rng(63);
  const ComplexMatrix rho = random_density(3, 2, rng);
  const ComplexMatrix u = random_unitary(3, rng);
  const ComplexMatrix evolved = u * rho * u.adjoint();
  const double f3 = fidelity_evolved_crosscheck(rho, u);
  CHECK(std::abs(fidelity(rho, evolved) - f3) < 1e-10);
}

TEST_CASE("coherent state fidelity decays as cos(s/2)^(2l)") {
  for (double l : {0.5, 1.0, 2.0}) {
    const ComplexMatrix rho = spin_coherent(l, Eigen::Vector3d::UnitZ());
    const Representation rep = Representation::spin(l);
    for (int k = 1; k <= 8; ++k) {
      const double s = k * M_PI / 8;
      const ComplexMatrix u = rep.unitary_at(LieDirection::su2_axis(0), s);
      const double f = fidelity(rho, ComplexMatrix(u * rho * u.adjoint()));
      CHECK(std::abs(f - std::pow(std::cos(s / 2), 2 * l)) < 1e-9);
    }
  }
}

TEST_CASE("asymmetry factor closed form for coherent references") {
  const double l = 1.0, s = M_PI / 3;
  const CompositeFrame frame =
      CompositeFrame::make(Representation::spin(0.5), Representation::spin(l),
                           spin_coherent(l, Eigen::Vector3d::UnitZ()));
  const double f = std::pow(std::cos(s / 2), 2 * l);
  const double expected = std::sqrt(1.0 / (f * f) - 1.0);
  CHECK(asymmetry_factor(frame, LieDirection::su2_axis(0), s) ==
        doctest::Approx(expected).epsilon(1e-9));
  // Rotations about the polarization axis leave the state fixed: factor 0.
  CHECK(asymmetry_factor(frame, LieDirection::su2_axis(2), s) < 1e-6);
}

TEST_CASE("stddev oracles and clip counter") {
  const Representation rep = Representation::spin(1.5);
  const ComplexMatrix rho = spin_coherent(1.5, Eigen::Vector3d::UnitZ());
  // Coherent spin-l: Delta S_x = sqrt(l/2), Delta S_z = 0.
  CHECK(stddev(rho, rep.generator(0)) ==
        doctest::Approx(std::sqrt(1.5 / 2)).epsilon(1e-10));
  CHECK(stddev(rho, rep.generator(2)) < 1e-7);
  // Maximally mixed qubit: Delta(sigma_z/2) = 1/2.
  CHECK(stddev(ComplexMatrix(0.5 * identity_matrix(2)),
               ComplexMatrix(0.5 * qrf::test::sz())) ==
        doctest::Approx(0.5).epsilon(1e-12));
  reset_stddev_clip_count();
  ComplexMatrix pure = ComplexMatrix::Zero(2, 2);
  pure(0, 0) = 1.0;
  (void)stddev(pure, ComplexMatrix(0.5 * qrf::test::sz()));
  CHECK(stddev_clip_count() >= 0);  // counter is queryable and non-negative
}

TEST_CASE("mandelstam-tamm lower bound domain and values") {
  const ComplexMatrix rho = spin_coherent(0.5, Eigen::Vector3d::UnitZ());
  const ComplexMatrix l_op = 0.5 * qrf::test::sx();
  // Delta = 1/2, so cos(s/2) for s within [0, pi].
  CHECK(mt_lower_bound(rho, l_op, M_PI / 2) ==
        doctest::Approx(std::cos(M_PI / 4)).epsilon(1e-12));
  CHECK_THROWS_AS(mt_lower_bound(rho, l_op, 4.0 * M_PI), RangeError);
  CHECK_THROWS_AS(mt_lower_bound(rho, l_op, -1.0), RangeError);
}

TEST_CASE("mt bound is respected by the actual fidelity for coherent states") {
  for (double l : {0.5, 1.0, 3.0}) {
    const ComplexMatrix rho = spin_coherent(l, Eigen::Vector3d::UnitZ());
    const Representation rep = Representation::spin(l);
    const ComplexMatrix gen = rep.generator(0);
    const double delta = stddev(rho, gen);
    for (double s : default_bound_grid()) {
      if (delta * s > M_PI / 2) continue;
      const ComplexMatrix u = rep.unitary_at(LieDirection::su2_axis(0), s);
      const double f = fidelity(rho, ComplexMatrix(u * rho * u.adjoint()));
      CHECK(f >= mt_lower_bound(rho, gen, s) - 1e-9);
    }
  }
}

TEST_CASE("rhs helpers: unitary variants are the defect-free limits") {
  const double gap = 0.8, eps = 0.05, asym = 1.7, delta = 1.1, gen = 0.5;
  CHECK(commutator_rhs(gap, eps, asym, 0.0, 0.0) ==
        doctest::Approx(2 * gap * eps + asym * 2 * std::sqrt(2 * eps))
            .epsilon(1e-12));
  CHECK(generator_rhs(gen, eps, delta, 0.0, 0.0) ==
        doctest::Approx(2 * gen * eps + 2 * std::sqrt(2.0) * delta * std::sqrt(eps))
            .epsilon(1e-12));
  CHECK(generator_rhs_unitary(gen, eps, delta) ==
        doctest::Approx(generator_rhs(gen, eps, delta, 0.0, 0.0)).epsilon(1e-12));
  // Right sides grow monotonically with the discrepancy.
  CHECK(commutator_rhs(gap, 0.2, asym, 0.1, 0.1) >
        commutator_rhs(gap, 0.1, asym, 0.1, 0.1));
  CHECK(generator_rhs(gen, 0.2, delta, 0.1, 0.1) >
        generator_rhs(gen, 0.1, delta, 0.1, 0.1));
  // Infinite asymmetry propagates to an infinite right side.
  CHECK(std::isinf(commutator_rhs(gap, eps, std::numeric_limits<double>::infinity(),
                                  0.0, 0.0)));
}

TEST_CASE("evaluator accepts covariant composites and rejects others") {
  SeedStream rng(71);
  const Representation rep_s = Representation::spin(0.5);
  const Representation rep_r = Representation::spin(1.0);
  const Representation rep_sr = Representation::tensor_pair(rep_s, rep_r);
  const CompositeFrame frame =
      CompositeFrame::make(rep_s, rep_r, random_density(3, 3, rng));
  const QuantumChannel raw =
      QuantumChannel::from_kraus(random_unital_kraus(6, 2, rng));
  const QuantumChannel lambda = QuantumChannel::depolarizing(0.5);
  // Non-covariant composites violate the precondition.
  CHECK_THROWS_AS(BoundEvaluator(raw, frame, lambda), PreconditionError);
  const QuantumChannel phi = twirl(raw, rep_sr);
  const BoundEvaluator ev(phi, frame, restrict_channel(phi, frame));
  const BoundReport rep = ev.commutator_bound(LieDirection::su2_axis(0), M_PI / 2,
                                              M_PI / 4);
  CHECK(rep.slack >= -1e-9);
  CHECK(rep.terms.at("epsilon_norm") < 1e-9);  // target == restriction
}

TEST_CASE("unitary-variant preconditions reject non-unitary targets") {
  SeedStream rng(72);
  const Representation rep_s = Representation::spin(0.5);
  const Representation rep_r = Representation::spin(0.5);
  const Representation rep_sr = Representation::tensor_pair(rep_s, rep_r);
  const CompositeFrame frame =
      CompositeFrame::make(rep_s, rep_r, random_density(2, 2, rng));
  const QuantumChannel phi =
      twirl(QuantumChannel::from_kraus(random_unital_kraus(4, 2, rng)), rep_sr);
  const BoundEvaluator ev(phi, frame, QuantumChannel::depolarizing(0.3));
  CHECK_THROWS_AS(ev.commutator_bound_unitary(LieDirection::su2_axis(0), 1.0, 1.0),
                  PreconditionError);
  CHECK_THROWS_AS(ev.generator_bound_unitary(LieDirection::su2_axis(0), 1.0),
                  PreconditionError);
}

TEST_CASE("commuting pair bound on polynomials of a common Hermitian") {
  SeedStream rng(73);
  const ComplexMatrix h = random_hermitian(3, rng);
  const ComplexMatrix a = h * h;
  const ComplexMatrix b = h * h * h + 2.0 * h;
  const QuantumChannel ch = QuantumChannel::from_kraus(random_unital_kraus(3, 2, rng));
  const BoundReport report = commuting_pair_bound(ch, a, b);
  CHECK(report.id == InequalityId::CommutingPairUncertainty);
  CHECK(report.slack >= -1e-9);
  // Non-commuting input is rejected.
  const QuantumChannel qubit_ch = QuantumChannel::depolarizing(0.5);
  CHECK_THROWS_AS(commuting_pair_bound(qubit_ch, qrf::test::sx(), qrf::test::sz()),
                  PreconditionError);
}

TEST_CASE("commuting pair bound is exactly tight for unitary conjugation") {
  SeedStream rng(74);
  const ComplexMatrix u = random_unitary(2, rng);
  const QuantumChannel ch = QuantumChannel::unitary(u);
  const ComplexMatrix a = qrf::test::sz();
  const ComplexMatrix b = 2.0 * qrf::test::sz();
  const BoundReport report = commuting_pair_bound(ch, a, b);
  // Unitary conjugation has zero defects and preserves commutation: 0 <= 0.
  CHECK(std::abs(report.lhs) < 1e-10);
  CHECK(std::abs(report.rhs) < 1e-6);
}

TEST_CASE("inequality names are stable snake_case identifiers") {
  CHECK(inequality_name(InequalityId::CommutatorTradeoff) == "commutator_tradeoff");
  CHECK(inequality_name(InequalityId::CommutatorTradeoffUnitary) ==
        "commutator_tradeoff_unitary");
  CHECK(inequality_name(InequalityId::GeneratorTradeoff) == "generator_tradeoff");
  CHECK(inequality_name(InequalityId::GeneratorTradeoffUnitary) ==
        "generator_tradeoff_unitary");
  CHECK(inequality_name(InequalityId::CommutingPairUncertainty) ==
        "commuting_pair_uncertainty");
  CHECK(inequality_name(InequalityId::AxisTriple) == "axis_triple");
  CHECK(inequality_name(InequalityId::AxisSum) == "axis_sum");
}

TEST_CASE("default bound grid is k*pi/8 for k=1..16") {
  const auto grid = default_bound_grid();
  REQUIRE(grid.size() == 16);
  CHECK(grid.front() == doctest::Approx(M_PI / 8).epsilon(1e-15));
  CHECK(grid.back() == doctest::Approx(2 * M_PI).epsilon(1e-15));
}

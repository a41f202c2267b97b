// Copyright 2026 The ipmagnus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "../test_util.hpp"
#include "ipmagnus/magnus.hpp"
#include "ipmagnus/oracle.hpp"

namespace ipm {
namespace {

const cplx I(0.0, 1.0);

LocalHamiltonian single_pauli(std::size_t n, const char* s, double c = 1.0) {
  LocalHamiltonian h(Lattice1D(std::max<std::size_t>(n, 2)));
  h.add_pauli(PauliTerm::parse(std::max<std::size_t>(n, 2), s), c);
  return h;
}

TEST(Conjugation, HeisenbergRotationOfX) {
  const LocalHamiltonian a = single_pauli(2, "Z0");
  const LocalTerm bx = LocalTerm::pauli(PauliTerm::parse(2, "X0"), 1.0);
  for (double s : {0.0, 0.3, 1.1, -2.0}) {
    const PauliSum got = conjugate_in_frame(bx, a, s);
    const PauliSum want = PauliSum::from_pairs(2, {{"X0", std::cos(2 * s)}, {"Y0", -std::sin(2 * s)}});
    EXPECT_LT(max_coefficient_distance(got, want), 1e-14) << s;
  }
}

TEST(Conjugation, CommutingTermUnchanged) {
  const LocalHamiltonian a = single_pauli(3, "Z0 Z1");
  const LocalTerm bx = LocalTerm::pauli(PauliTerm::parse(3, "Z1 Z2"), 0.7);
  EXPECT_LT(max_coefficient_distance(conjugate_in_frame(bx, a, 1.7), bx.op()), 1e-14);
}

TEST(Conjugation, MatchesFullLatticeOracleAtDiameter) {
  for (int trial = 0; trial < 5; ++trial) {
    const ModelInstance m = build_ising_perturbed(3, static_cast<std::uint64_t>(trial));
    const LocalTerm& bx = m.b.terms()[static_cast<std::size_t>(trial) % m.b.size()];
    const double s = 0.4 + 0.3 * trial;
    const Restriction cone = light_cone_restrict(m.a, bx.support(), 2);
    const PauliSum got = conjugate_in_frame(bx, cone.restricted, s);
    const DenseOperator ua = exact_evolution(dense(m.a), -s);  // e^{iAs}
    const Matrix want = ua.matrix() * testing::kron_sum(bx.op()) * ua.matrix().adjoint();
    EXPECT_LT(testing::max_abs(testing::kron_sum(got) - want), 1e-10);
  }
}

TEST(Conjugation, OversizedUnion) {
  LocalHamiltonian a(Lattice1D(16));
  for (std::size_t i = 0; i + 1 < 16; ++i) a.add_pauli(PauliTerm::on_sites(16, "XX", {i, i + 1}), 1.0);
  const LocalTerm bx = LocalTerm::pauli(PauliTerm::parse(16, "Z0"), 1.0);
  EXPECT_THROW(conjugate_in_frame(bx, a, 0.1), OversizedError);
}

TEST(Omega1, ClosedFormSingleQubit) {
  const LocalHamiltonian a = single_pauli(2, "Z0"), b = single_pauli(2, "X0");
  const double alpha = 0.3, h = 0.8;
  const PauliSum got = omega1(a, b, alpha, h, 1);
  const PauliSum want = scale(PauliSum::from_pairs(2, {{"X0", std::sin(2 * h) / 2}, {"Y0", (std::cos(2 * h) - 1) / 2}}),
                              -I * alpha);
  EXPECT_LT(max_coefficient_distance(got, want), 1e-14);
}

TEST(Omega1, ZeroAlphaAndCommutingCase) {
  const ModelInstance m = build_xy_disordered(4, 0);
  EXPECT_TRUE(omega1(m.a, m.b, 0.0, 1.0, 1).empty());
  LocalHamiltonian a(Lattice1D(3));
  for (std::size_t i = 0; i < 3; ++i) a.add_pauli(PauliTerm::single(3, i, 'Z'), 1.0);
  const LocalHamiltonian b = single_pauli(3, "Z1 Z2");
  const PauliSum got = omega1(a, b, 0.2, 0.7, 1);
  EXPECT_LT(max_coefficient_distance(got, PauliSum(PauliTerm::parse(3, "Z1 Z2"), -I * 0.2 * 0.7)), 1e-15);
  EXPECT_THROW(omega1(m.a, m.b, 0.1, 1.0, 1, QuadratureRule::gauss_legendre(1)), DomainError);
}

TEST(Omega2, ClosedFormSingleQubit) {
  const LocalHamiltonian a = single_pauli(2, "Z0"), b = single_pauli(2, "X0");
  const double alpha = 0.3, h = 0.8;
  const PauliSum got = omega2(a, b, alpha, h, 1);
  const PauliSum want(PauliTerm::parse(2, "Z0"), -I * alpha * alpha * (2 * h - std::sin(2 * h)) / 4.0);
  EXPECT_LT(max_coefficient_distance(got, want), 1e-13);
}

TEST(Omega2, VanishesWhenBCommutesWithA) {
  LocalHamiltonian a(Lattice1D(3));
  for (std::size_t i = 0; i < 3; ++i) a.add_pauli(PauliTerm::single(3, i, 'Z'), 1.0);
  LocalHamiltonian b(Lattice1D(3));
  b.add_pauli(PauliTerm::parse(3, "Z0 Z1"), 0.4);
  b.add_pauli(PauliTerm::parse(3, "Z2"), -0.9);
  EXPECT_TRUE(omega2(a, b, 0.3, 1.0, 2).empty());
}

TEST(Omega2, SecondOrderAgainstLogOracle) {
  const ModelInstance m = build_xy_disordered(4, 2);
  double previous = 0.0;
  for (double alpha : {0.02, 0.01}) {
    const PauliSum om = omega1(m.a, m.b, alpha, 1.0, 3) + omega2(m.a, m.b, alpha, 1.0, 3);
    const double err = spectral_distance(dense(om), magnus_log_reference(m.a, m.b, alpha, 1.0));
    if (previous > 0) EXPECT_GE(previous / err, 7.0);
    previous = err;
  }
}

TEST(Plan, CompositionAndDiagnostics) {
  const ModelInstance m = build_xy_disordered(6, 1);
  const MagnusPlan p1 = build_plan(m.a, m.b, 0.05, 1.0, 1, 2);
  EXPECT_EQ(p1.omega, omega1(m.a, m.b, 0.05, 1.0, 2));
  EXPECT_TRUE(is_anti_hermitian(p1.omega, 1e-10));
  EXPECT_EQ(p1.diagnostics.term_count, p1.omega.size());
  EXPECT_LE(static_cast<double>(p1.diagnostics.term_count), std::pow(4.0, p1.diagnostics.max_support) * 6);
  EXPECT_FALSE(p1.diagnostics.convergence_warning);
  EXPECT_TRUE(build_plan(m.a, m.b, 1.0, 1.0, 1, 2).diagnostics.convergence_warning);

  const MagnusPlan p2 = build_plan(m.a, m.b, 0.05, 1.0, 2, 2);
  EXPECT_TRUE(is_anti_hermitian(p2.omega, 1e-10));
  EXPECT_LT(max_coefficient_distance(p2.omega, p1.omega + omega2(m.a, m.b, 0.05, 1.0, 2)), 1e-15);
  EXPECT_THROW(build_plan(m.a, m.b, 0.05, 1.0, 3, 2), UnsupportedOrderError);
}

TEST(Plan, SupportCeiling) {
  const ModelInstance m = build_ising_perturbed(8, 0);
  for (int q : {1, 2}) {
    for (std::size_t radius : {0u, 1u, 2u}) {
      const MagnusPlan p = build_plan(m.a, m.b, 0.05, 0.5, q, radius);
      EXPECT_LE(p.diagnostics.max_support, static_cast<std::size_t>(q) * 2 + 2 * radius * q) << q << " " << radius;
      EXPECT_TRUE(is_anti_hermitian(p.omega, 1e-10));
    }
  }
}

TEST(Plan, QuadratureConverged) {
  const ModelInstance m = build_xy_disordered(6, 3);
  const MagnusQuadrature base;
  const MagnusQuadrature fine{QuadratureRule::gauss_legendre(32), QuadratureRule::gauss_legendre(24),
                              QuadratureRule::gauss_legendre(24)};
  const PauliSum a = build_plan(m.a, m.b, 0.1, 1.0, 2, 5, base).omega;
  const PauliSum b = build_plan(m.a, m.b, 0.1, 1.0, 2, 5, fine).omega;
  EXPECT_LT(max_coefficient_distance(a, b), 1e-10);
}

TEST(Plan, BuilderReusableAcrossAlpha) {
  const ModelInstance m = build_xy_disordered(5, 4);
  const MagnusBuilder builder(m.a, m.b, 2);
  for (double alpha : {0.01, 0.1}) {
    EXPECT_LT(max_coefficient_distance(build_plan(builder, m.b, alpha, 0.5, 2).omega,
                                       build_plan(m.a, m.b, alpha, 0.5, 2, 2).omega),
              1e-15);
  }
}

}  // namespace
}  // namespace ipm

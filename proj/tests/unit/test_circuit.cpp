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

#include "../test_util.hpp"
#include "ipmagnus/circuit.hpp"
#include "ipmagnus/fit.hpp"
#include "ipmagnus/oracle.hpp"
#include "ipmagnus/simulate.hpp"

namespace ipm {
namespace {

const cplx I(0.0, 1.0);

std::vector<WeightedTerm> terms_of(std::size_t n, std::vector<std::pair<const char*, double>> list) {
  std::vector<WeightedTerm> out;
  for (const auto& [s, c] : list) out.push_back({PauliTerm::parse(n, s), c});
  return out;
}

PauliSum sum_of(const std::vector<WeightedTerm>& terms) {
  PauliSum s(terms.front().term.num_qubits());
  for (const auto& t : terms) s.add(t.term, t.coeff);
  return s;
}

double pf_error(const std::vector<WeightedTerm>& terms, double h, int p) {
  const std::size_t n = terms.front().term.num_qubits();
  return spectral_distance(circuit_unitary(suzuki(n, terms, h, p)), exact_evolution(dense(sum_of(terms)), h));
}

TEST(ProductFormula, CommutingTermsAreExact) {
  const auto terms = terms_of(3, {{"Z0", 0.3}, {"Z1", -1.2}, {"Z0 Z2", 0.7}});
  for (int p : {1, 2, 4, 6}) EXPECT_LT(pf_error(terms, 0.9, p), 1e-13) << p;
}

TEST(ProductFormula, SingleTermIsExact) {
  const auto terms = terms_of(2, {{"X0 Y1", 0.8}});
  for (double h : {0.1, 1.0, 5.0}) EXPECT_LT(pf_error(terms, h, 1), 1e-13);
}

TEST(ProductFormula, FirstOrderOnZPlusX) {
  const auto terms = terms_of(1, {{"Z0", 1.0}, {"X0", 1.0}});
  const double h = 0.1;
  // Oracle value for e^{-ihZ} e^{-ihX} against e^{-ih(Z+X)}.
  const Matrix z = testing::kron_sum(PauliSum(PauliTerm::parse(1, "Z0"), 1.0));
  const Matrix x = testing::kron_sum(PauliSum(PauliTerm::parse(1, "X0"), 1.0));
  const Matrix v = (cplx(std::cos(h)) * Matrix::Identity(2, 2) - I * std::sin(h) * z) *
                   (cplx(std::cos(h)) * Matrix::Identity(2, 2) - I * std::sin(h) * x);
  const double want = spectral_distance(DenseOperator(v), exact_evolution(dense(sum_of(terms)), h));
  const double got = pf_error(terms, h, 1);
  EXPECT_NEAR(got, want, 1e-14);
  EXPECT_LE(got, h * h / 2 * 2.0);
}

TEST(ProductFormula, LocalErrorOrder) {
  const auto terms = terms_of(2, {{"Z0", 1.0}, {"X0 X1", 0.7}, {"Y1", -0.4}});
  for (int p : {1, 2, 4}) {
    std::vector<double> hs, errs;
    for (double h : {0.2, 0.1, 0.05, 0.025}) {
      hs.push_back(h);
      errs.push_back(pf_error(terms, h, p));
    }
    EXPECT_NEAR(fit_loglog(hs, errs).slope, p + 1, 0.15) << p;
  }
}

TEST(ProductFormula, SuzukiStructure) {
  EXPECT_NEAR(suzuki_m(4), 0.41449, 1e-5);
  EXPECT_NEAR(suzuki_m(4), 1.0 / (4.0 - std::cbrt(4.0)), 1e-15);
  for (int p : {2, 4, 6}) {
    double sum = 0.0;
    for (double s : suzuki_stage_times(0.7, p)) sum += s;
    EXPECT_NEAR(sum, 0.7, 4e-16) << p;
  }
  EXPECT_EQ(suzuki_stage_times(1.0, 4).size(), 5u);
  EXPECT_EQ(suzuki_stage_times(1.0, 6).size(), 25u);

  const auto terms = terms_of(3, {{"Z0", 1.0}, {"X0 X1", 0.5}, {"Y2", -0.25}, {"Z1 Z2", 2.0}});
  const CircuitIR v2 = trotter2(3, terms, 0.3);
  const auto& ops = v2.ops();
  ASSERT_EQ(ops.size(), 7u);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const auto& a = std::get<PauliRotation>(ops[k]);
    const auto& b = std::get<PauliRotation>(ops[ops.size() - 1 - k]);
    EXPECT_EQ(a.term, b.term);
    EXPECT_EQ(a.angle, b.angle);
  }
  // Total angle per term equals h * coeff for every order.
  for (int p : {1, 2, 4, 6}) {
    std::map<PauliTerm, double> total;
    const CircuitIR ir = suzuki(3, terms, 0.3, p);
    for (const auto& op : ir.ops()) {
      const auto& r = std::get<PauliRotation>(op);
      total[r.term] += r.angle;
    }
    for (const auto& t : terms) EXPECT_NEAR(total[t.term], 0.3 * t.coeff.real(), 1e-15) << p;
  }
  EXPECT_THROW(suzuki(3, terms, 0.1, 3), UnsupportedOrderError);
  EXPECT_THROW(suzuki(3, terms, 0.1, 5), UnsupportedOrderError);
}

TEST(ProductFormula, AntiHermitianGenerator) {
  std::vector<WeightedTerm> terms{{PauliTerm::parse(2, "X0"), cplx(0.0, -0.3)}, {PauliTerm::parse(2, "Z0 Z1"), cplx(0.0, 0.2)}};
  const CircuitIR one = trotter1(2, {terms[0]}, 1.0);
  EXPECT_LT(spectral_distance(circuit_unitary(one), exp_anti_hermitian(dense(PauliSum(terms[0].term, terms[0].coeff)))),
            1e-14);
  std::vector<WeightedTerm> mixed{{PauliTerm::parse(2, "X0"), cplx(0.1, 0.0)}, {PauliTerm::parse(2, "Z0"), cplx(0.0, 0.1)}};
  EXPECT_THROW(trotter1(2, mixed, 1.0), HermiticityError);
}

TEST(ChooseSteps, Examples) {
  EXPECT_EQ(choose_steps(12, 0.1, 3.0, 1, 1), 2u);
  EXPECT_EQ(choose_steps(12, 1e-6, 1.0, 1, 2), 1u);
  EXPECT_EQ(choose_steps(8, 0.2, 2.0, 2, 2), choose_steps(8, 0.2, 2.0, 2, 2, 1.0, 1.0));
  EXPECT_EQ(choose_steps(12, 0.1, 3.0, 1, 1, 1.0, 3.0), 4u);
  EXPECT_THROW(choose_steps(0, 0.1, 1.0, 1, 1), DomainError);
}

TEST(CompileStep, ZeroAlphaIsFrameOnly) {
  const ModelInstance m = build_xy_disordered(4, 0);
  const MagnusPlan plan = build_plan(m.a, m.b, 0.0, 1.0, 1, 1);
  const CircuitIR ir = compile_step(plan, m.a, 1);
  ASSERT_EQ(ir.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<FrameOp>(ir.ops()[0]));
  EXPECT_THROW(compile_step(PauliSum(PauliTerm::parse(4, "X0"), 1.0), std::make_shared<const LocalHamiltonian>(m.a),
                            1.0, 1),
               HermiticityError);
}

TEST(CompileStep, StageErrorOrder) {
  const ModelInstance m = build_xy_disordered(4, 1);
  const DenseOperator frame = exact_evolution(dense(m.a), 1.0);
  for (int p : {1, 2}) {
    std::vector<double> as, errs;
    for (double alpha : {0.04, 0.02, 0.01, 0.005}) {
      const MagnusPlan plan = build_plan(m.a, m.b, alpha, 1.0, 1, 3);
      const double e = spectral_distance(circuit_unitary(compile_step(plan, m.a, p)),
                                         frame * exp_anti_hermitian(dense(plan.omega)));
      as.push_back(alpha);
      errs.push_back(e);
    }
    EXPECT_NEAR(fit_loglog(as, errs).slope, p + 1, 0.2) << p;
  }
}

TEST(GateCount, Elementary) {
  CircuitIR ir(3);
  ir.append(PauliRotation{PauliTerm::parse(3, "Z1"), 0.3});
  EXPECT_EQ(expand_elementary(ir, true), (GateCount{1, 0, 0}));
  CircuitIR xx(3);
  xx.append(PauliRotation{PauliTerm::parse(3, "X0 X1"), 0.3});
  EXPECT_EQ(expand_elementary(xx, true), (GateCount{1, 2, 4}));
  CircuitIR w3(3);
  w3.append(PauliRotation{PauliTerm::parse(3, "X0 Z1 Y2"), 0.3});
  EXPECT_EQ(expand_elementary(w3, true), (GateCount{1, 4, 4}));
}

TEST(GateCount, FirstOrderXYStep) {
  const ModelInstance m = build_xy_disordered(12, 0);
  const CircuitIR step = trotter1(12, split_terms(m.a, m.b, 0.1), 0.5);
  // 12 Z rotations, 11 YY + 11 XX two-qubit rotations, 12 X rotations.
  EXPECT_EQ(step.size(), 46u);
  EXPECT_EQ(expand_elementary(step, true), (GateCount{46, 44, 112}));
}

TEST(GateCount, FrameOps) {
  const ModelInstance xy = build_xy_disordered(5, 0), ising = build_ising_perturbed(5, 0);
  CircuitIR ir(5);
  ir.append(FrameOp{std::make_shared<const LocalHamiltonian>(xy.a), 0.5, "A"});
  EXPECT_EQ(expand_elementary(ir, true), (GateCount{5, 0, 0}));
  EXPECT_THROW(expand_elementary(ir, false), DomainError);
  CircuitIR nn(5);
  nn.append(FrameOp{std::make_shared<const LocalHamiltonian>(ising.a), 0.5, "A"});
  EXPECT_THROW(expand_elementary(nn, true), DomainError);
  const CircuitIR split = pretrotterize_frames(nn, 3, 2);
  EXPECT_NO_THROW(expand_elementary(split, false));
  EXPECT_LT(spectral_distance(circuit_unitary(pretrotterize_frames(nn, 64, 2)), circuit_unitary(nn)), 1e-3);
}

TEST(CircuitText, RoundTrip) {
  const ModelInstance m = build_xy_disordered(3, 0);
  auto a = std::make_shared<const LocalHamiltonian>(m.a);
  const MagnusPlan plan = build_plan(m.a, m.b, 0.1, 1.0, 1, 1);
  const CircuitIR ir = compile_step(plan.omega, a, 1.0, 1).repeat(2);
  const std::string text = ir.to_text();
  EXPECT_EQ(text.substr(0, 9), "QUBITS 3\n");
  EXPECT_NE(text.find("FRAME 1 A\n"), std::string::npos);
  const CircuitIR back = CircuitIR::from_text(text, {{"A", a}});
  EXPECT_EQ(back.to_text(), text);
  EXPECT_THROW(CircuitIR::from_text(text), DomainError);
  EXPECT_THROW(CircuitIR::from_text("QUBITS 2\nROT 0.1 XXX\n"), DimensionError);
}

TEST(Circuit, ZeroAnglesElidedAndRepeat) {
  CircuitIR ir(2);
  ir.append(PauliRotation{PauliTerm::parse(2, "X0"), 0.0});
  EXPECT_TRUE(ir.empty());
  ir.append(PauliRotation{PauliTerm::parse(2, "X0"), 0.2});
  EXPECT_EQ(ir.repeat(3).size(), 3u);
  EXPECT_THROW(ir.append(PauliRotation{PauliTerm::parse(2, "X0"), std::nan("")}), DomainError);
}

TEST(Simulator, MatchesDenseProduct) {
  std::mt19937_64 rng(8);
  const ModelInstance m = build_ising_perturbed(4, 0);
  CircuitIR ir(4);
  Matrix want = Matrix::Identity(16, 16);
  for (int k = 0; k < 6; ++k) {
    const PauliTerm p = testing::random_term(4, rng);
    ir.append(PauliRotation{p, 0.1 * (k + 1)});
    want = want * exact_evolution(dense(PauliSum(p, 1.0)), 0.1 * (k + 1)).matrix();
  }
  ir.append(FrameOp{std::make_shared<const LocalHamiltonian>(m.a), 0.7, "A"});
  want = want * exact_evolution(dense(m.a), 0.7).matrix();
  const DenseOperator got = circuit_unitary(ir);
  EXPECT_LT(testing::max_abs(got.matrix() - want), 1e-12);
  EXPECT_TRUE(got.is_unitary(1e-10));
  const LinearMap map = circuit_map(ir);
  const Vector v = Vector::Unit(16, 3);
  EXPECT_LT((map.apply_adjoint(map.apply(v)) - v).norm(), 1e-12);
}

TEST(TwoGroup, BoundsHoldOnSmallInstance) {
  const ModelInstance m = build_ising_perturbed(4, 2);
  const double alpha = 0.3, t = 0.4;
  const TwoGroupBounds b = two_group_bounds(m.a, m.b, alpha, t);
  const DenseOperator u = exact_evolution(dense(combine(m.a, m.b, alpha)), t);
  const DenseOperator ua = exact_evolution(dense(m.a), t), ub = exact_evolution(dense(scale(as_sum(m.b), alpha)), t);
  const DenseOperator ub2 = exact_evolution(dense(scale(as_sum(m.b), alpha)), t / 2);
  EXPECT_LE(spectral_distance(u, ua * ub), b.first);
  EXPECT_LE(spectral_distance(u, ub2 * ua * ub2), b.second);
}

}  // namespace
}  // namespace ipm

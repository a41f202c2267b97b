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

#include "ipmagnus/circuit.hpp"

#include "ipmagnus/oracle.hpp"

namespace ipm {

std::vector<double> suzuki_stage_times(double h, int p) {
  if (p != 2 && p != 4 && p != 6) throw UnsupportedOrderError("suzuki stages need p in {2, 4, 6}");
  if (p == 2) return {h};
  const double outer = suzuki_m(p) * h;
  const double middle = h - 4.0 * outer;
  std::vector<double> out;
  for (double s : {outer, outer, middle, outer, outer}) {
    const auto inner = suzuki_stage_times(s, p - 2);
    out.insert(out.end(), inner.begin(), inner.end());
  }
  return out;
}

std::size_t choose_steps(std::size_t n, double alpha, double t, int q, int p, double d,
                         double c_r) {
  if (n == 0 || alpha < 0 || t < 0 || q < 1 || p < 1 || d <= 0 || c_r <= 0) {
    throw DomainError("choose_steps needs positive inputs");
  }
  const double x = alpha * d * t;
  const double nn = static_cast<double>(n);
  const double magnus = std::pow(nn, 1.0 / q) * std::pow(x, 1.0 + 1.0 / q);
  const double pf = std::pow(nn, 1.0 / p) * std::pow(x, 1.0 + 1.0 / p);
  const double r = std::ceil(c_r * std::max(magnus, pf) - 1e-12);
  return r < 1.0 ? 1 : static_cast<std::size_t>(r);
}

CircuitIR compile_step(const PauliSum& omega, const std::shared_ptr<const LocalHamiltonian>& a, double h,
                       int p, const std::string& ref) {
  detail::check_order(p);
  if (!is_anti_hermitian(omega, 1e-10)) throw HermiticityError("Magnus generator is not anti-Hermitian");
  CircuitIR ir(a->num_qubits());
  ir.append(FrameOp{a, h, ref});
  ir.append(suzuki(a->num_qubits(), weighted_terms(omega), 1.0, p));
  return ir;
}

CircuitIR compile_step(const MagnusPlan& plan, const LocalHamiltonian& a, int p, const std::string& ref) {
  return compile_step(plan.omega, std::make_shared<const LocalHamiltonian>(a), plan.step, p, ref);
}

CircuitIR pretrotterize_frames(const CircuitIR& ir, std::size_t r_prime, int p) {
  if (r_prime == 0) throw DomainError("pretrotterize_frames needs r' >= 1");
  CircuitIR out(ir.num_qubits());
  for (const auto& op : ir.ops()) {
    if (const auto* r = std::get_if<PauliRotation>(&op)) {
      out.append(*r);
      continue;
    }
    const auto& f = std::get<FrameOp>(op);
    std::vector<WeightedTerm> terms;
    for (const auto& t : f.generator->terms()) {
      for (const auto& [pt, c] : t.op()) terms.push_back({pt, c});
    }
    out.append(suzuki(ir.num_qubits(), terms, f.duration / static_cast<double>(r_prime), p).repeat(r_prime));
  }
  return out;
}

GateCount expand_elementary(const CircuitIR& ir, bool a_fast_forward) {
  GateCount total;
  for (const auto& op : ir.ops()) {
    if (const auto* r = std::get_if<PauliRotation>(&op)) {
      total += rotation_cost(r->term);
      continue;
    }
    const auto& f = std::get<FrameOp>(op);
    if (!a_fast_forward) throw DomainError("frame op '" + f.ref + "' must be pre-Trotterized before counting");
    if (interaction_range(*f.generator) > 0) {
      throw DomainError("frame op '" + f.ref + "' has range > 0 and is not fast-forwardable; pre-Trotterize it");
    }
    total.rotations += ir.num_qubits();
  }
  return total;
}

TwoGroupBounds two_group_bounds(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha, double t) {
  const PauliSum sa = as_sum(a), sb = as_sum(b);
  const PauliSum ab = commutator(sa, sb);
  const double n_ab = dense_spectral_norm(dense_matrix(ab));
  const double n_aab = dense_spectral_norm(dense_matrix(commutator(sa, ab)));
  const double n_bba = dense_spectral_norm(dense_matrix(commutator(sb, commutator(sb, sa))));
  const double aa = std::abs(alpha);
  return {t * t / 2 * aa * n_ab, t * t * t / 12 * aa * n_aab + t * t * t / 24 * aa * aa * n_bba};
}

}  // namespace ipm

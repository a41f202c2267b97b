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

#include "ipmagnus/simulate.hpp"

namespace ipm {

CircuitSimulator::CircuitSimulator(const CircuitIR& ir) : n_(ir.num_qubits()), ir_(ir) {
  if (n_ > 26) throw OversizedError("statevector simulation limited to 26 qubits");
  for (const auto& op : ir_.ops()) {
    const auto* f = std::get_if<FrameOp>(&op);
    if (!f) continue;
    const LocalHamiltonian* key = f->generator.get();
    if (diag_.count(key) || general_.count({key, f->duration})) continue;
    const PauliSum h = as_sum(*f->generator);
    bool diagonal = true;
    for (const auto& [p, c] : h) diagonal = diagonal && p.x_mask() == 0;
    if (diagonal) {
      diag_.emplace(key, std::make_shared<const Eigen::VectorXd>(energies(h)));
    } else {
      general_.emplace(std::make_pair(key, f->duration),
                       std::make_pair(std::make_shared<const ChebyshevPropagator>(h, f->duration),
                                      std::make_shared<const ChebyshevPropagator>(h, -f->duration)));
    }
  }
}

Eigen::VectorXd CircuitSimulator::energies(const PauliSum& h) const {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim()));
  for (const auto& [p, c] : h) {
    for (std::uint64_t k = 0; k < dim(); ++k) {
      e(static_cast<Eigen::Index>(k)) += (std::popcount(p.z_mask() & k) & 1) ? -c.real() : c.real();
    }
  }
  return e;
}

void CircuitSimulator::step(const CircuitOp& op, Vector& v, bool adjoint) const {
  if (const auto* r = std::get_if<PauliRotation>(&op)) {
    detail::apply_rotation(r->term, adjoint ? -r->angle : r->angle, v);
    return;
  }
  const auto& f = std::get<FrameOp>(op);
  const LocalHamiltonian* key = f.generator.get();
  if (auto it = diag_.find(key); it != diag_.end()) {
    const double tau = adjoint ? -f.duration : f.duration;
    const Eigen::VectorXd& e = *it->second;
    for (Eigen::Index k = 0; k < v.size(); ++k) v(k) *= std::exp(cplx(0.0, -e(k) * tau));
    return;
  }
  const auto& pair = general_.at({key, f.duration});
  v = adjoint ? (*pair.second)(v) : (*pair.first)(v);
}

LinearMap circuit_map(const CircuitIR& ir) {
  auto sim = std::make_shared<const CircuitSimulator>(ir);
  return {sim->dim(), [sim](const Vector& v) { return sim->apply(v); },
          [sim](const Vector& v) { return sim->apply_adjoint(v); }};
}

DenseOperator circuit_unitary(const CircuitIR& ir) {
  if (ir.num_qubits() > kMaxDenseQubits) throw OversizedError("dense circuit unitary limited to 14 qubits");
  const CircuitSimulator sim(ir);
  const auto d = static_cast<Eigen::Index>(sim.dim());
  Matrix u(d, d);
  for (Eigen::Index k = 0; k < d; ++k) u.col(k) = sim.apply(Vector::Unit(d, k));
  return DenseOperator(u);
}

}  // namespace ipm

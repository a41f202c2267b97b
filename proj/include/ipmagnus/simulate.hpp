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

#pragma once

// Statevector execution of circuit IR.

#include <cmath>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "ipmagnus/circuit.hpp"
#include "ipmagnus/oracle.hpp"

namespace ipm {

namespace detail {

/// v <- exp(-i theta P) v.
inline void apply_rotation(const PauliTerm& p, double theta, Vector& v) {
  const std::uint64_t x = p.x_mask(), z = p.z_mask();
  const cplx base = i_power(std::popcount(x & z));
  const double c = std::cos(theta), s = std::sin(theta);
  const cplx ms(0.0, -s);
  const std::uint64_t dim = static_cast<std::uint64_t>(v.size());
  auto phase = [&](std::uint64_t k) { return (std::popcount(z & k) & 1) ? -base : base; };
  if (x == 0) {
    const cplx plus = c + ms * base, minus = c - ms * base;
    for (std::uint64_t k = 0; k < dim; ++k) v(static_cast<Eigen::Index>(k)) *= (std::popcount(z & k) & 1) ? minus : plus;
    return;
  }
  const std::uint64_t low = x & (~x + 1);
  for (std::uint64_t k = 0; k < dim; ++k) {
    if (k & low) continue;
    const std::uint64_t kp = k ^ x;
    const auto i = static_cast<Eigen::Index>(k), j = static_cast<Eigen::Index>(kp);
    const cplx a = v(i), b = v(j);
    v(j) = c * b + ms * phase(k) * a;
    v(i) = c * a + ms * phase(kp) * b;
  }
}

}  // namespace detail

/// Applies a circuit and its adjoint to state vectors. Diagonal frame
/// generators are applied as phases; others through Chebyshev series.
class CircuitSimulator {
 public:
  explicit CircuitSimulator(const CircuitIR& ir);

  std::size_t dim() const { return std::size_t{1} << n_; }

  Vector apply(Vector v) const {
    const auto& ops = ir_.ops();
    for (std::size_t k = ops.size(); k-- > 0;) step(ops[k], v, false);
    return v;
  }

  Vector apply_adjoint(Vector v) const {
    for (const auto& op : ir_.ops()) step(op, v, true);
    return v;
  }

 private:
  Eigen::VectorXd energies(const PauliSum& h) const;

  void step(const CircuitOp& op, Vector& v, bool adjoint) const;

  std::size_t n_;
  CircuitIR ir_;
  std::map<const LocalHamiltonian*, std::shared_ptr<const Eigen::VectorXd>> diag_;
  std::map<std::pair<const LocalHamiltonian*, double>,
           std::pair<std::shared_ptr<const ChebyshevPropagator>, std::shared_ptr<const ChebyshevPropagator>>>
      general_;
};

LinearMap circuit_map(const CircuitIR& ir);

/// Dense unitary realized by a circuit.
DenseOperator circuit_unitary(const CircuitIR& ir);

}  // namespace ipm

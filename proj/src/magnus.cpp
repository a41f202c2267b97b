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

#include "ipmagnus/magnus.hpp"

#include <Eigen/Eigenvalues>

namespace ipm {

namespace detail {

std::vector<std::size_t> connected_terms(const LocalHamiltonian& a, std::uint64_t seed, std::uint64_t& reach) {
  reach = seed;
  std::vector<bool> used(a.terms().size(), false);
  std::vector<std::size_t> picked;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t k = 0; k < a.terms().size(); ++k) {
      if (used[k] || a.terms()[k].op().empty()) continue;
      const std::uint64_t m = a.terms()[k].support_mask();
      if (m & reach) {
        used[k] = true;
        picked.push_back(k);
        reach |= m;
        grew = true;
      }
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace detail

std::shared_ptr<const detail::FrameEigensystem> FrameCache::get(const LocalHamiltonian& a_loc,
                                                                 const std::vector<std::size_t>& terms,
                                                                 std::uint64_t reach) {
  Key key{reach, {}};
  for (std::size_t k : terms) key.second.push_back(a_loc.terms()[k].op().str() + "|");
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  auto sys = std::make_shared<detail::FrameEigensystem>();
  sys->sites = detail::mask_sites(reach);
  PauliSum gen(a_loc.num_qubits());
  for (std::size_t k : terms) gen += a_loc.terms()[k].op();
  const Matrix h = dense_on_sites(gen, sys->sites);
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.real());
    sys->lambda = es.eigenvalues();
    sys->q = es.eigenvectors().cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    sys->lambda = es.eigenvalues();
    sys->q = es.eigenvectors();
  }
  cache_.emplace(std::move(key), sys);
  return sys;
}

FrameConjugator::FrameConjugator(const PauliSum& b, const LocalHamiltonian& a_loc, FrameCache* cache)
    : n_(b.num_qubits()) {
  check_same_size(b.num_qubits(), a_loc.num_qubits());
  std::uint64_t reach = 0;
  const auto terms = detail::connected_terms(a_loc, b.support_mask(), reach);
  const std::size_t width = static_cast<std::size_t>(std::popcount(reach));
  if (width > kMaxFrameSites) {
    throw OversizedError("frame rotation needs " + std::to_string(width) + " sites, limit is " +
                         std::to_string(kMaxFrameSites));
  }
  FrameCache local;
  sys_ = (cache ? *cache : local).get(a_loc, terms, reach);
  const Matrix bd = dense_on_sites(b, sys_->sites);
  b_eig_ = sys_->q.adjoint() * bd * sys_->q;
}

PauliSum FrameConjugator::at(double s) const {
  const auto d = b_eig_.rows();
  Vector phase(d);
  for (Eigen::Index a = 0; a < d; ++a) phase(a) = std::exp(cplx(0.0, sys_->lambda(a) * s));
  const Matrix rotated = phase.asDiagonal() * b_eig_ * phase.conjugate().asDiagonal();
  return pauli_decompose(sys_->q * rotated * sys_->q.adjoint(), sys_->sites, n_);
}

PauliSum FrameConjugator::integrate(std::span<const double> times, std::span<const double> weights) const {
  const auto d = b_eig_.rows();
  Matrix acc = Matrix::Zero(d, d);
  for (std::size_t k = 0; k < times.size(); ++k) {
    Vector phase(d);
    for (Eigen::Index a = 0; a < d; ++a) phase(a) = std::exp(cplx(0.0, sys_->lambda(a) * times[k]));
    acc.noalias() += weights[k] * (phase.asDiagonal() * b_eig_ * phase.conjugate().asDiagonal());
  }
  return pauli_decompose(sys_->q * acc * sys_->q.adjoint(), sys_->sites, n_);
}

MagnusBuilder::MagnusBuilder(const LocalHamiltonian& a, const LocalHamiltonian& b, std::size_t radius)
    : n_(a.num_qubits()), radius_(radius) {
  check_same_size(a.num_qubits(), b.num_qubits());
  FrameCache cache;
  for (const auto& term : b.terms()) {
    if (term.op().empty()) continue;
    const Restriction cone = light_cone_restrict(a, term.support(), radius);
    conjugators_.emplace_back(term.op(), cone.restricted, &cache);
  }
}

PauliSum MagnusBuilder::omega2(double alpha, double h, const QuadratureRule& outer, const QuadratureRule& inner) const {
  check_rule(outer);
  check_rule(inner);
  PauliSum acc(n_);
  if (alpha == 0.0) return acc;
  for (const auto& node : outer.nodes()) {
    const double s1 = node.x * h;
    PauliSum at_s1(n_);
    for (const auto& c : conjugators_) at_s1 += c.at(s1);
    const PauliSum partial = frame_integral(inner, s1);
    acc += scale(commutator(at_s1, partial), node.w * h);
  }
  // (-i alpha)^2 / 2 = -alpha^2 / 2
  return scale(acc, -0.5 * alpha * alpha);
}

PauliSum MagnusBuilder::frame_integral(const QuadratureRule& quad, double length) const {
  std::vector<double> times, weights;
  for (const auto& nd : quad.nodes()) {
    times.push_back(nd.x * length);
    weights.push_back(nd.w * length);
  }
  PauliSum acc(n_);
  for (const auto& c : conjugators_) acc += c.integrate(times, weights);
  return acc;
}

PauliSum conjugate_in_frame(const LocalTerm& b_term, const LocalHamiltonian& a_loc, double s) {
  return FrameConjugator(b_term.op(), a_loc).at(s);
}

PauliSum omega1(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha, double h,
                std::size_t radius, const QuadratureRule& quad) {
  if (quad.order() < 2) throw DomainError("Magnus quadrature needs at least 2 nodes");
  if (alpha == 0.0) return PauliSum(a.num_qubits());
  return MagnusBuilder(a, b, radius).omega1(alpha, h, quad);
}

PauliSum omega2(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha, double h,
                std::size_t radius, const QuadratureRule& outer,
                const QuadratureRule& inner) {
  if (outer.order() < 2 || inner.order() < 2) throw DomainError("Magnus quadrature needs at least 2 nodes");
  if (alpha == 0.0) return PauliSum(a.num_qubits());
  return MagnusBuilder(a, b, radius).omega2(alpha, h, outer, inner);
}

MagnusPlan build_plan(const MagnusBuilder& builder, const LocalHamiltonian& b, double alpha, double h, int q,
                      const MagnusQuadrature& quad) {
  if (q != 1 && q != 2) {
    throw UnsupportedOrderError("Magnus order q = " + std::to_string(q) +
                                " is not supported; only q in {1, 2} is implemented (the general "
                                "permutation-sum formula is out of scope)");
  }
  MagnusPlan plan{q, builder.radius(), h, alpha, quad, PauliSum(builder.num_qubits()), {}};
  if (alpha != 0.0) {
    plan.omega = builder.omega1(alpha, h, quad.first);
    if (q == 2) plan.omega += builder.omega2(alpha, h, quad.outer, quad.inner);
  }
  plan.diagnostics.term_count = plan.omega.size();
  plan.diagnostics.max_support = plan.omega.max_weight();
  plan.diagnostics.l1_norm = plan.omega.l1_norm();
  plan.diagnostics.convergence_warning = std::abs(alpha) * as_sum(b).l1_norm() * h > 1.0;
  return plan;
}

MagnusPlan build_plan(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha, double h, int q,
                      std::size_t radius, const MagnusQuadrature& quad) {
  if (q != 1 && q != 2) {
    throw UnsupportedOrderError("Magnus order q = " + std::to_string(q) +
                                " is not supported; only q in {1, 2} is implemented (the general "
                                "permutation-sum formula is out of scope)");
  }
  return build_plan(MagnusBuilder(a, b, radius), b, alpha, h, q, quad);
}

}  // namespace ipm

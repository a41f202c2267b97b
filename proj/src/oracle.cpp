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

#include "ipmagnus/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <random>

namespace ipm {

namespace {

/// Q f(lambda) Q^dagger for a Hermitian matrix, using a real solver when possible.
template <typename F>
Matrix hermitian_function(const Matrix& h, F&& f) {
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.real());
    Vector fl(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < fl.size(); ++i) fl(i) = f(es.eigenvalues()(i));
    const Matrix q = es.eigenvectors().cast<cplx>();
    return q * fl.asDiagonal() * q.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Vector fl(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < fl.size(); ++i) fl(i) = f(es.eigenvalues()(i));
  return es.eigenvectors() * fl.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

DenseOperator exact_evolution(const DenseOperator& h, double t) {
  if (!h.is_hermitian(1e-10)) throw HermiticityError("exact_evolution needs a Hermitian generator");
  return DenseOperator(hermitian_function(h.matrix(), [t](double l) { return std::exp(cplx(0.0, -l * t)); }));
}

DenseOperator exp_anti_hermitian(const DenseOperator& omega) {
  if (!omega.is_anti_hermitian(1e-10)) throw HermiticityError("exp_anti_hermitian needs an anti-Hermitian input");
  const Matrix k = cplx(0.0, 1.0) * omega.matrix();
  return DenseOperator(hermitian_function(k, [](double l) { return std::exp(cplx(0.0, -l)); }));
}

double spectral_norm_iterative(const LinearMap& d, double rel_tol, std::size_t max_iter,
                               std::uint64_t seed) {
  const std::size_t n = d.dim;
  if (n == 0) return 0.0;
  const CounterRng rng(seed);
  Vector v(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) v(static_cast<Eigen::Index>(k)) = cplx(rng.uniform_pm1(0, k), rng.uniform_pm1(1, k));
  v.normalize();

  std::vector<Vector> basis;
  std::vector<double> alphas, betas;
  double theta = 0.0;
  const std::size_t limit = std::min(max_iter, n);
  for (std::size_t j = 0; j < limit; ++j) {
    basis.push_back(v);
    Vector w = d.apply_adjoint(d.apply(v));
    const double a = v.dot(w).real();  // dot() conjugates the left operand
    alphas.push_back(a);
    w -= a * v;
    if (j > 0) w -= betas.back() * basis[j - 1];
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& b : basis) w -= b.dot(w) * b;
    }
    const double beta = w.norm();

    const auto m = static_cast<Eigen::Index>(alphas.size());
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alphas.data(), m);
    Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(betas.data(), m - 1))
                                : Eigen::VectorXd();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    theta = std::max(0.0, tri.eigenvalues()(m - 1));
    const double residual = beta * std::abs(tri.eigenvectors()(m - 1, m - 1));
    if (beta <= 1e-300 || residual <= rel_tol * theta) break;
    betas.push_back(beta);
    v = w / beta;
  }
  return std::sqrt(theta);
}

double spectral_norm(const DenseOperator& a) {
  if (a.dim() <= kDenseSvdMaxDim) {
    if (a.dim() == 0) return 0.0;
    Eigen::BDCSVD<Matrix> svd(a.matrix());
    return svd.singularValues()(0);
  }
  return spectral_norm_iterative(as_map(a));
}

double spectral_distance(const DenseOperator& u, const DenseOperator& v) {
  check_same_size(u.dim(), v.dim());
  return spectral_norm(u - v);
}

double spectral_distance(const LinearMap& u, const LinearMap& v, double rel_tol) {
  return spectral_norm_iterative(difference(u, v), rel_tol);
}

LinearMap evolution_map(const PauliSum& h, double t) {
  auto fwd = std::make_shared<const ChebyshevPropagator>(h, t);
  auto bwd = std::make_shared<const ChebyshevPropagator>(h, -t);
  return {std::size_t{1} << h.num_qubits(), [fwd](const Vector& v) { return (*fwd)(v); },
          [bwd](const Vector& v) { return (*bwd)(v); }};
}

DenseOperator principal_log_unitary(const DenseOperator& w, double branch_margin) {
  if (!w.is_unitary(1e-9)) throw DomainError("principal_log_unitary needs a unitary input");
  const Matrix& m = w.matrix();
  constexpr double kappa = 0.3819660112501051;  // irrational, avoids accidental ties
  const Matrix g = 0.5 * (m + m.adjoint()) + kappa * (m - m.adjoint()) / cplx(0.0, 2.0);
  Eigen::SelfAdjointEigenSolver<Matrix> es(g);
  Matrix q = es.eigenvectors();
  Matrix t = q.adjoint() * m * q;
  const Eigen::Index dim = t.rows();
  Eigen::Index start = 0;
  while (start < dim) {
    Eigen::Index end = start + 1;
    while (end < dim && es.eigenvalues()(end) - es.eigenvalues()(end - 1) < 1e-9) ++end;
    const Eigen::Index len = end - start;
    if (len > 1) {
      Eigen::ComplexSchur<Matrix> schur(t.block(start, start, len, len));
      q.middleCols(start, len) = q.middleCols(start, len) * schur.matrixU();
    }
    start = end;
  }
  t = q.adjoint() * m * q;
  Vector log_diag(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double phi = std::arg(t(i, i));
    if (std::abs(phi) > std::numbers::pi - branch_margin) {
      throw BranchCutError("eigenphase " + std::to_string(phi) + " at the branch cut; shrink the time step");
    }
    log_diag(i) = cplx(0.0, phi);
  }
  Matrix log = q * log_diag.asDiagonal() * q.adjoint();
  log = 0.5 * (log - log.adjoint()).eval();
  return DenseOperator(std::move(log));
}

DenseOperator magnus_log_reference(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha, double t) {
  const DenseOperator u = exact_evolution(dense(combine(a, b, alpha)), t);
  const DenseOperator ua = exact_evolution(dense(as_sum(a)), t);
  return principal_log_unitary(ua.adjoint() * u);
}

DenseOperator interaction_frame_propagator(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha,
                                           double t) {
  const DenseOperator u = exact_evolution(dense(combine(a, b, alpha)), t);
  const DenseOperator ua = exact_evolution(dense(as_sum(a)), t);
  return ua.adjoint() * u;
}


SparsePauliOperator::SparsePauliOperator(const PauliSum& a) : n_(a.num_qubits()) {
  if (n_ > 26) throw OversizedError("statevector operators limited to 26 qubits");
  const std::size_t dim = std::size_t{1} << n_;
  for (const auto& [p, c] : a) {
    auto it = std::find_if(groups_.begin(), groups_.end(), [&](const Group& g) { return g.x == p.x_mask(); });
    if (it == groups_.end()) {
      groups_.push_back({p.x_mask(), std::vector<cplx>(dim)});
      it = std::prev(groups_.end());
    }
    const cplx base = c * detail::i_power(std::popcount(p.x_mask() & p.z_mask()));
    const std::uint64_t z = p.z_mask();
    for (std::uint64_t k = 0; k < dim; ++k) {
      it->diag[k] += (std::popcount(z & k) & 1) ? -base : base;
    }
  }
}

void SparsePauliOperator::apply(const Vector& in, Vector& out) const {
  out.setZero(in.size());
  const std::size_t dim = this->dim();
  for (const Group& g : groups_) {
    const cplx* d = g.diag.data();
    for (std::uint64_t k = 0; k < dim; ++k) {
      out(static_cast<Eigen::Index>(k ^ g.x)) += d[k] * in(static_cast<Eigen::Index>(k));
    }
  }
}

ChebyshevPropagator::ChebyshevPropagator(const PauliSum& h, double t)
    : op_(std::make_shared<const SparsePauliOperator>(h)) {
  if (!is_hermitian(h, 1e-12)) throw HermiticityError("Chebyshev propagation needs a Hermitian generator");
  bound_ = h.l1_norm() * (1.0 + 1e-12) + 1e-300;
  const double x = bound_ * std::abs(t);
  for (std::size_t k = 0;; ++k) {
    const double j = std::cyl_bessel_j(static_cast<double>(k), x);
    // (-i)^k for forward time, (+i)^k for backward time.
    const int power = t >= 0 ? -static_cast<int>(k % 4) : static_cast<int>(k % 4);
    coeffs_.push_back((k == 0 ? 1.0 : 2.0) * j * detail::i_power(power));
    if (static_cast<double>(k) > x && std::abs(j) < 1e-17) break;
    if (k > 100000) throw Error("Chebyshev series failed to converge");
  }
}

Vector ChebyshevPropagator::operator()(const Vector& v) const {
  const double inv = 1.0 / bound_;
  Vector t0 = v;
  Vector out = coeffs_[0] * t0;
  if (coeffs_.size() == 1) return out;
  Vector t1;
  op_->apply(t0, t1);
  t1 *= inv;
  out += coeffs_[1] * t1;
  Vector t2;
  for (std::size_t k = 2; k < coeffs_.size(); ++k) {
    op_->apply(t1, t2);
    t2 = (2.0 * inv) * t2 - t0;
    out += coeffs_[k] * t2;
    std::swap(t0, t1);
    std::swap(t1, t2);
  }
  return out;
}

}  // namespace ipm

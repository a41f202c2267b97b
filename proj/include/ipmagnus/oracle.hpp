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

// Dense and matrix-free reference linear algebra: operator realization, exact
// evolution, spectral distances and the exact interaction-frame generator.
// Every acceptance check measures against this module.

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <vector>

#include "ipmagnus/dense.hpp"
#include "ipmagnus/errors.hpp"
#include "ipmagnus/model.hpp"
#include "ipmagnus/pauli.hpp"

namespace ipm {

/// Above this dimension spectral distances switch to the Krylov iteration.
inline constexpr std::size_t kDenseSvdMaxDim = 1024;

class DenseOperator {
 public:
  DenseOperator() = default;
  explicit DenseOperator(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionError("dense operator must be square");
    const auto d = static_cast<std::size_t>(m_.rows());
    if (d != 0 && !std::has_single_bit(d)) throw DimensionError("dense operator dimension must be a power of two");
  }

  static DenseOperator identity(std::size_t n) {
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
    return DenseOperator(Matrix::Identity(d, d));
  }

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t num_qubits() const { return static_cast<std::size_t>(std::countr_zero(dim())); }
  const Matrix& matrix() const { return m_; }

  bool is_hermitian(double tol) const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol; }
  bool is_anti_hermitian(double tol) const { return (m_ + m_.adjoint()).cwiseAbs().maxCoeff() <= tol; }
  bool is_unitary(double tol) const {
    const Matrix id = Matrix::Identity(m_.rows(), m_.cols());
    return (m_.adjoint() * m_ - id).cwiseAbs().maxCoeff() <= tol;
  }

  DenseOperator adjoint() const { return DenseOperator(m_.adjoint()); }

  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
    check_same_size(a.dim(), b.dim());
    return DenseOperator(a.m_ * b.m_);
  }
  friend DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
    check_same_size(a.dim(), b.dim());
    return DenseOperator(a.m_ + b.m_);
  }
  friend DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
    check_same_size(a.dim(), b.dim());
    return DenseOperator(a.m_ - b.m_);
  }

 private:
  Matrix m_;
};

inline DenseOperator dense(const PauliSum& a) {
  if (a.num_qubits() > kMaxDenseQubits) {
    throw OversizedError("dense oracle limited to " + std::to_string(kMaxDenseQubits) + " qubits");
  }
  return DenseOperator(dense_matrix(a));
}

inline DenseOperator dense(const LocalHamiltonian& h) { return dense(as_sum(h)); }

/// e^{-i h t} for Hermitian h, by eigendecomposition.
DenseOperator exact_evolution(const DenseOperator& h, double t);

/// e^{omega} for anti-Hermitian omega, via the Hermitian generator i * omega.
DenseOperator exp_anti_hermitian(const DenseOperator& omega);

/// Action of an operator on state vectors, together with its adjoint.
struct LinearMap {
  std::size_t dim = 0;
  std::function<Vector(const Vector&)> apply;
  std::function<Vector(const Vector&)> apply_adjoint;
};

inline LinearMap as_map(const DenseOperator& op) {
  auto m = std::make_shared<const Matrix>(op.matrix());
  return {op.dim(), [m](const Vector& v) -> Vector { return *m * v; },
          [m](const Vector& v) -> Vector { return m->adjoint() * v; }};
}

/// left * right: right acts first.
inline LinearMap compose(LinearMap left, LinearMap right) {
  check_same_size(left.dim, right.dim);
  return {left.dim, [l = left.apply, r = right.apply](const Vector& v) { return l(r(v)); },
          [la = left.apply_adjoint, ra = right.apply_adjoint](const Vector& v) { return ra(la(v)); }};
}

inline LinearMap power(const LinearMap& m, std::size_t r) {
  return {m.dim,
          [f = m.apply, r](const Vector& v) {
            Vector out = v;
            for (std::size_t i = 0; i < r; ++i) out = f(out);
            return out;
          },
          [f = m.apply_adjoint, r](const Vector& v) {
            Vector out = v;
            for (std::size_t i = 0; i < r; ++i) out = f(out);
            return out;
          }};
}

inline LinearMap difference(LinearMap u, LinearMap v) {
  check_same_size(u.dim, v.dim);
  return {u.dim, [a = u.apply, b = v.apply](const Vector& x) -> Vector { return a(x) - b(x); },
          [a = u.apply_adjoint, b = v.apply_adjoint](const Vector& x) -> Vector { return a(x) - b(x); }};
}

/// Largest singular value of a matrix-free operator d. Lanczos iteration on
/// d^dagger d with full reorthogonalization (a Krylov-accelerated power
/// iteration) stopped once the top Ritz pair's residual is below rel_tol times
/// its Ritz value.
double spectral_norm_iterative(const LinearMap& d, double rel_tol = 1e-8, std::size_t max_iter = 600,
                               std::uint64_t seed = 0x5EED);

/// Largest singular value of a dense operator.
double spectral_norm(const DenseOperator& a);

/// Largest singular value of u - v: dense SVD up to dimension 1024, Krylov above.
double spectral_distance(const DenseOperator& u, const DenseOperator& v);

double spectral_distance(const LinearMap& u, const LinearMap& v, double rel_tol = 1e-8);

/// Matrix-free action of a Pauli sum: strings sharing an x-mask are applied
/// together as one permutation times a precomputed diagonal.
class SparsePauliOperator {
 public:
  explicit SparsePauliOperator(const PauliSum& a);

  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return std::size_t{1} << n_; }

  void apply(const Vector& in, Vector& out) const;

  Vector operator()(const Vector& in) const {
    Vector out;
    apply(in, out);
    return out;
  }

 private:
  struct Group {
    std::uint64_t x;
    std::vector<cplx> diag;
  };
  std::size_t n_;
  std::vector<Group> groups_;
};

/// Chebyshev-series action of e^{-i h t} for a Hermitian Pauli sum h. The
/// spectrum is bounded by the l1 norm; terms are kept until the Bessel
/// coefficients fall below 1e-17.
class ChebyshevPropagator {
 public:
  ChebyshevPropagator(const PauliSum& h, double t);

  std::size_t num_terms() const { return coeffs_.size(); }

  Vector operator()(const Vector& v) const;

 private:
  std::shared_ptr<const SparsePauliOperator> op_;
  double bound_ = 0.0;
  std::vector<cplx> coeffs_;
};

/// Matrix-free e^{-i h t}; the adjoint is e^{+i h t}.
LinearMap evolution_map(const PauliSum& h, double t);

/// Principal logarithm of a unitary. The eigenbasis comes from the Hermitian
/// combination Re(W) + kappa Im(W), which shares W's eigenvectors; clusters of
/// equal Hermitian eigenvalues are split with a Schur step on the block.
DenseOperator principal_log_unitary(const DenseOperator& w, double branch_margin = 1e-8);

/// Exact interaction-frame generator Omega(t) = log(U_A(t)^dagger U(t)) with
/// U(t) = e^{-i (A + alpha B) t}, principal branch.
DenseOperator magnus_log_reference(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha, double t);

/// e^{Omega(t)} = U_A(t)^dagger U(t) directly, without the logarithm.
DenseOperator interaction_frame_propagator(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha,
                                           double t);

}  // namespace ipm

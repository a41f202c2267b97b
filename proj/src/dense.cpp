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

#include "ipmagnus/dense.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace ipm {

Matrix dense_on_sites(const PauliSum& a, std::span<const std::size_t> sites) {
  if (sites.size() > kMaxDenseQubits) {
    throw OversizedError("dense realization limited to " + std::to_string(kMaxDenseQubits) +
                         " qubits, requested " + std::to_string(sites.size()));
  }
  const std::uint64_t allowed = detail::site_mask(sites);
  const std::size_t dim = std::size_t{1} << sites.size();
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& [p, c] : a) {
    if (p.support_mask() & ~allowed) {
      throw DimensionError("term " + p.str() + " not supported on the requested sites");
    }
    const std::uint64_t x = detail::compress_mask(p.x_mask(), sites);
    const std::uint64_t z = detail::compress_mask(p.z_mask(), sites);
    const cplx base = c * detail::i_power(std::popcount(x & z));
    for (std::uint64_t k = 0; k < dim; ++k) {
      const double sign = (std::popcount(z & k) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(k ^ x), static_cast<Eigen::Index>(k)) += sign * base;
    }
  }
  return m;
}

Matrix dense_matrix(const PauliSum& a) {
  std::vector<std::size_t> sites(a.num_qubits());
  for (std::size_t j = 0; j < sites.size(); ++j) sites[j] = j;
  return dense_on_sites(a, sites);
}

PauliSum pauli_decompose(const Matrix& m, std::span<const std::size_t> sites,
                         std::size_t n) {
  const std::size_t dim = std::size_t{1} << sites.size();
  if (static_cast<std::size_t>(m.rows()) != dim || static_cast<std::size_t>(m.cols()) != dim) {
    throw DimensionError("matrix shape does not match 2^|sites|");
  }
  PauliSum out(n);
  std::vector<cplx> f(dim);
  const double norm = 1.0 / static_cast<double>(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (std::uint64_t k = 0; k < dim; ++k) {
      f[k] = m(static_cast<Eigen::Index>(k ^ x), static_cast<Eigen::Index>(k));
    }
    detail::walsh_hadamard(f);
    for (std::uint64_t z = 0; z < dim; ++z) {
      const cplx c = detail::i_power(-std::popcount(x & z)) * f[z] * norm;
      if (std::abs(c) < kDropTolerance) continue;
      out.add(PauliTerm(n, detail::expand_mask(x, sites), detail::expand_mask(z, sites)), c);
    }
  }
  return out;
}

double dense_spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.isApprox(m.adjoint(), 1e-14) || (m - m.adjoint()).norm() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double local_spectral_norm(const PauliSum& a, std::size_t max_sites) {
  if (a.empty()) return 0.0;
  std::vector<std::size_t> sites;
  for (std::uint64_t m = a.support_mask(); m != 0; m &= m - 1) {
    sites.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  if (sites.size() > max_sites) {
    throw OversizedError("local norm needs a support of at most " + std::to_string(max_sites) +
                         " sites, got " + std::to_string(sites.size()));
  }
  if (sites.empty()) return std::abs(a.begin()->second);
  return dense_spectral_norm(dense_on_sites(a, sites));
}

}  // namespace ipm

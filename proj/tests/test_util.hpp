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

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <string>

#include "ipmagnus/dense.hpp"
#include "ipmagnus/pauli.hpp"

namespace ipm::testing {

/// Kronecker-product realization with site 0 as the least significant bit,
/// built from explicit 2x2 Pauli matrices.
inline Matrix kron_pauli(const PauliTerm& p) {
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t site = p.num_qubits(); site-- > 0;) {
    Matrix s(2, 2);
    switch (p.at(site)) {
      case 'X': s << 0, 1, 1, 0; break;
      case 'Y': s << 0, -i, i, 0; break;
      case 'Z': s << 1, 0, 0, -1; break;
      default: s << 1, 0, 0, 1; break;
    }
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index a = 0; a < out.rows(); ++a) {
      for (Eigen::Index b = 0; b < out.cols(); ++b) next.block(2 * a, 2 * b, 2, 2) = out(a, b) * s;
    }
    out = next;
  }
  return out;
}

inline Matrix kron_sum(const PauliSum& a) {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << a.num_qubits());
  Matrix m = Matrix::Zero(d, d);
  for (const auto& [p, c] : a) m += c * kron_pauli(p);
  return m;
}

inline PauliTerm random_term(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, 3);
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  std::string s;
  std::vector<std::size_t> sites;
  for (std::size_t j = 0; j < n; ++j) {
    s += letters[letter(rng)];
    sites.push_back(j);
  }
  return PauliTerm::on_sites(n, s, sites);
}

inline PauliSum random_sum(std::size_t n, std::size_t terms, std::mt19937_64& rng, bool hermitian = false) {
  std::normal_distribution<double> g;
  PauliSum s(n);
  for (std::size_t k = 0; k < terms; ++k) s.add(random_term(n, rng), hermitian ? cplx(g(rng), 0.0) : cplx(g(rng), g(rng)));
  return s;
}

inline Matrix random_unitary(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix m(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) m(a, b) = cplx(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(m);
  return qr.householderQ();
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace ipm::testing

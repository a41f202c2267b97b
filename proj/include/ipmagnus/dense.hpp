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

// Dense matrix realizations of Pauli sums on a chosen list of sites, and the
// inverse Pauli decomposition. Basis index bit j corresponds to sites[j].

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <span>
#include <vector>

#include "ipmagnus/errors.hpp"
#include "ipmagnus/pauli.hpp"

namespace ipm {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense realizations are capped at 14 qubits (16384 x 16384).
inline constexpr std::size_t kMaxDenseQubits = 14;

namespace detail {

/// Maps lattice masks onto the contiguous local register given by `sites`.
inline std::uint64_t compress_mask(std::uint64_t mask, std::span<const std::size_t> sites) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < sites.size(); ++j) {
    if ((mask >> sites[j]) & 1U) out |= std::uint64_t{1} << j;
  }
  return out;
}

inline std::uint64_t expand_mask(std::uint64_t local, std::span<const std::size_t> sites) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < sites.size(); ++j) {
    if ((local >> j) & 1U) out |= std::uint64_t{1} << sites[j];
  }
  return out;
}

inline std::uint64_t site_mask(std::span<const std::size_t> sites) {
  std::uint64_t m = 0;
  for (std::size_t s : sites) m |= std::uint64_t{1} << s;
  return m;
}

inline cplx i_power(int k) {
  static constexpr cplx kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPowers[k & 3];
}

/// In-place Walsh-Hadamard transform: out[z] = sum_k (-1)^{z.k} in[k].
inline void walsh_hadamard(std::span<cplx> v) {
  for (std::size_t len = 1; len < v.size(); len <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const cplx a = v[j], b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

}  // namespace detail

/// Dense matrix of `a` restricted to `sites`; every term must be supported inside.
Matrix dense_on_sites(const PauliSum& a, std::span<const std::size_t> sites);

/// Dense matrix of `a` on all of its qubits.
Matrix dense_matrix(const PauliSum& a);

/// Pauli coefficients Tr(P^dagger M) / 2^u of a matrix on `sites`, re-embedded
/// into an n-qubit sum. Runs in O(u 4^u) via one Walsh-Hadamard transform per x.
PauliSum pauli_decompose(const Matrix& m, std::span<const std::size_t> sites,
                         std::size_t n);

/// Largest singular value of a dense matrix.
double dense_spectral_norm(const Matrix& m);

/// Spectral norm of a sum evaluated densely on its own support only.
double local_spectral_norm(const PauliSum& a, std::size_t max_sites = 12);

}  // namespace ipm

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

// One-dimensional lattices and geometrically local Hamiltonians.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ipmagnus/dense.hpp"
#include "ipmagnus/errors.hpp"
#include "ipmagnus/pauli.hpp"

namespace ipm {

enum class Boundary { open, periodic };

inline std::string to_string(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }

inline Boundary parse_boundary(const std::string& s) {
  if (s == "open") return Boundary::open;
  if (s == "periodic") return Boundary::periodic;
  throw DomainError("unknown boundary '" + s + "'");
}

class Lattice1D {
 public:
  explicit Lattice1D(std::size_t n = 2, Boundary boundary = Boundary::open)
      : n_(n), boundary_(boundary) {
    if (n < 2) throw DomainError("a lattice needs at least 2 sites, got " + std::to_string(n));
    if (n > kMaxQubits) throw DimensionError("lattice larger than 64 sites");
  }

  std::size_t size() const { return n_; }
  Boundary boundary() const { return boundary_; }

  std::size_t distance(std::size_t i, std::size_t j) const {
    const std::size_t d = i > j ? i - j : j - i;
    return boundary_ == Boundary::open ? d : std::min(d, n_ - d);
  }

  /// Largest distance between any two sites.
  std::size_t diameter() const { return boundary_ == Boundary::open ? n_ - 1 : n_ / 2; }

  /// Distance from `site` to the nearest member of `set`.
  std::size_t distance_to(std::size_t site, const std::vector<std::size_t>& set) const {
    std::size_t best = n_;
    for (std::size_t s : set) best = std::min(best, distance(site, s));
    return best;
  }

  /// Largest pairwise distance inside `sites`.
  std::size_t set_diameter(const std::vector<std::size_t>& sites) const {
    std::size_t d = 0;
    for (std::size_t a : sites) {
      for (std::size_t b : sites) d = std::max(d, distance(a, b));
    }
    return d;
  }

  friend bool operator==(const Lattice1D&, const Lattice1D&) = default;

 private:
  std::size_t n_;
  Boundary boundary_;
};

/// One local term: an operator together with the site set it lives on.
class LocalTerm {
 public:
  LocalTerm(std::vector<std::size_t> support, PauliSum op) : support_(std::move(support)), op_(std::move(op)) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
    if (support_.empty()) throw DomainError("local term needs a nonempty support");
    const std::uint64_t allowed = detail::site_mask(support_);
    if (op_.support_mask() & ~allowed) {
      throw DomainError("local term operator reaches outside its declared support");
    }
  }

  /// Single Pauli string with a coefficient; the support is the string's support.
  static LocalTerm pauli(const PauliTerm& p, cplx coeff) {
    return LocalTerm(p.support(), PauliSum(p, coeff));
  }

  const std::vector<std::size_t>& support() const { return support_; }
  const PauliSum& op() const { return op_; }
  std::uint64_t support_mask() const { return detail::site_mask(support_); }

  friend bool operator==(const LocalTerm&, const LocalTerm&) = default;

 private:
  std::vector<std::size_t> support_;
  PauliSum op_;
};

class LocalHamiltonian {
 public:
  explicit LocalHamiltonian(Lattice1D lattice = Lattice1D()) : lattice_(lattice) {}

  const Lattice1D& lattice() const { return lattice_; }
  std::size_t num_qubits() const { return lattice_.size(); }
  const std::vector<LocalTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  LocalHamiltonian& add(LocalTerm term) {
    check_same_size(lattice_.size(), term.op().num_qubits());
    if (term.support().back() >= lattice_.size()) throw DimensionError("term support beyond lattice");
    terms_.push_back(std::move(term));
    return *this;
  }

  LocalHamiltonian& add_pauli(const PauliTerm& p, cplx coeff) { return add(LocalTerm::pauli(p, coeff)); }

  friend bool operator==(const LocalHamiltonian&, const LocalHamiltonian&) = default;

 private:
  Lattice1D lattice_;
  std::vector<LocalTerm> terms_;
};

/// Coefficient-wise sum of every term operator.
inline PauliSum as_sum(const LocalHamiltonian& h) {
  PauliSum s(h.num_qubits());
  for (const auto& t : h.terms()) s += t.op();
  return s;
}

/// a + alpha * b as one Pauli sum.
inline PauliSum combine(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha) {
  check_same_size(a.num_qubits(), b.num_qubits());
  PauliSum s = as_sum(a);
  if (alpha != 0.0) s += scale(as_sum(b), alpha);
  return s;
}

/// Largest support diameter over all terms (0 for purely single-site Hamiltonians).
inline std::size_t interaction_range(const LocalHamiltonian& h) {
  std::size_t chi = 0;
  for (const auto& t : h.terms()) chi = std::max(chi, h.lattice().set_diameter(t.support()));
  return chi;
}

/// d = max over sites i of the summed spectral norms of the terms touching i.
inline double effective_degree(const LocalHamiltonian& b) {
  std::vector<double> load(b.num_qubits(), 0.0);
  for (const auto& t : b.terms()) {
    if (t.support().size() > 12) {
      throw OversizedError("effective_degree evaluates terms densely; support of " +
                           std::to_string(t.support().size()) + " sites exceeds 12");
    }
    const double norm = t.op().empty() ? 0.0 : dense_spectral_norm(dense_on_sites(t.op(), t.support()));
    for (std::size_t s : t.support()) load[s] += norm;
  }
  return load.empty() ? 0.0 : *std::max_element(load.begin(), load.end());
}

/// Counter-based generator: a SplitMix64 finalizer over (seed, stream, counter).
/// Every draw is a pure function of its coordinates, so coefficient i of a
/// model is identical for every lattice size.
class CounterRng {
 public:
  static constexpr const char* kName = "splitmix64-counter";

  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const {
    std::uint64_t h = mix(seed_ + 0x9E3779B97F4A7C15ULL);
    h = mix(h ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
    return mix(h + counter * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform on the open interval (0, 1).
  double uniform01(std::uint64_t stream, std::uint64_t counter) const {
    return (static_cast<double>(bits(stream, counter) >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform on the open interval (-1, 1).
  double uniform_pm1(std::uint64_t stream, std::uint64_t counter) const {
    return 2.0 * uniform01(stream, counter) - 1.0;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
};

struct XYCoefficients {
  std::uint64_t seed = 0;
  std::vector<double> r;  // YY couplings, n-1 of them
  std::vector<double> s;  // XX couplings, n-1 of them
  std::vector<double> u;  // X fields, n of them

  friend bool operator==(const XYCoefficients&, const XYCoefficients&) = default;
};

struct ModelInstance {
  LocalHamiltonian a;
  LocalHamiltonian b;
  XYCoefficients coeffs;
};

inline XYCoefficients draw_xy_coefficients(std::size_t n, std::uint64_t seed) {
  const CounterRng rng(seed);
  XYCoefficients c;
  c.seed = seed;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    c.r.push_back(rng.uniform_pm1(0, i));
    c.s.push_back(rng.uniform_pm1(1, i));
  }
  for (std::size_t i = 0; i < n; ++i) c.u.push_back(rng.uniform_pm1(2, i));
  return c;
}

/// B = sum_i r_i Y_i Y_{i+1} + s_i X_i X_{i+1} - sum_i u_i X_i on an open chain.
inline LocalHamiltonian xy_perturbation(std::size_t n, const XYCoefficients& c) {
  LocalHamiltonian b(Lattice1D(n, Boundary::open));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b.add_pauli(PauliTerm::on_sites(n, "YY", {i, i + 1}), c.r[i]);
    b.add_pauli(PauliTerm::on_sites(n, "XX", {i, i + 1}), c.s[i]);
  }
  for (std::size_t i = 0; i < n; ++i) b.add_pauli(PauliTerm::single(n, i, 'X'), -c.u[i]);
  return b;
}

/// Disordered XY model: A = sum_i Z_i, B as in xy_perturbation, open boundary.
inline ModelInstance build_xy_disordered(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw DomainError("build_xy_disordered needs n >= 2");
  const XYCoefficients coeffs = draw_xy_coefficients(n, seed);
  ModelInstance m{LocalHamiltonian(Lattice1D(n, Boundary::open)), xy_perturbation(n, coeffs), coeffs};
  for (std::size_t i = 0; i < n; ++i) m.a.add_pauli(PauliTerm::single(n, i, 'Z'), 1.0);
  return m;
}

/// Nearest-neighbor unperturbed part for light-cone studies: a mixed-field
/// Ising chain A = sum_i Z_i Z_{i+1} + sum_i (0.8 X_i + 0.5 Z_i), with the same
/// disordered perturbation B as the XY model.
inline ModelInstance build_ising_perturbed(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw DomainError("build_ising_perturbed needs n >= 2");
  const XYCoefficients coeffs = draw_xy_coefficients(n, seed);
  ModelInstance m{LocalHamiltonian(Lattice1D(n, Boundary::open)), xy_perturbation(n, coeffs), coeffs};
  for (std::size_t i = 0; i + 1 < n; ++i) m.a.add_pauli(PauliTerm::on_sites(n, "ZZ", {i, i + 1}), 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    PauliSum field(n);
    field.add(PauliTerm::single(n, i, 'X'), 0.8);
    field.add(PauliTerm::single(n, i, 'Z'), 0.5);
    m.a.add(LocalTerm({i}, field));
  }
  return m;
}

}  // namespace ipm

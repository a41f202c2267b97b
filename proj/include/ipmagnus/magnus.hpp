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

// Interaction-frame Magnus generators computed classically.
//
// With B_I(s) = -i alpha e^{iAs} B e^{-iAs}, the first two Magnus operators of
// one step of length h are
//   Omega_1(h) = int_0^h B_I(s) ds,
//   Omega_2(h) = 1/2 int_0^h ds1 int_0^s1 ds2 [B_I(s1), B_I(s2)].
// Each term B_X is rotated only by A_{X,R}, the part of A inside radius R of X.

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "ipmagnus/dense.hpp"
#include "ipmagnus/errors.hpp"
#include "ipmagnus/lightcone.hpp"
#include "ipmagnus/model.hpp"
#include "ipmagnus/pauli.hpp"
#include "ipmagnus/quadrature.hpp"

namespace ipm {

/// Largest register on which a frame rotation is evaluated densely.
inline constexpr std::size_t kMaxFrameSites = 14;

namespace detail {

/// Eigensystem of a frame generator restricted to a contiguous local register.
struct FrameEigensystem {
  std::vector<std::size_t> sites;
  Eigen::VectorXd lambda;
  Matrix q;
};

/// Terms of `a` reachable from `seed` through chains of overlapping supports.
std::vector<std::size_t> connected_terms(const LocalHamiltonian& a, std::uint64_t seed, std::uint64_t& reach);

inline std::vector<std::size_t> mask_sites(std::uint64_t m) {
  std::vector<std::size_t> sites;
  for (; m != 0; m &= m - 1) sites.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return sites;
}

}  // namespace detail

/// Frame eigensystems keyed by the generator terms they contain.
class FrameCache {
 public:
  std::shared_ptr<const detail::FrameEigensystem> get(const LocalHamiltonian& a_loc,
                                                      const std::vector<std::size_t>& terms,
                                                      std::uint64_t reach);

 private:
  using Key = std::pair<std::uint64_t, std::vector<std::string>>;
  std::map<Key, std::shared_ptr<const detail::FrameEigensystem>> cache_;
};

/// e^{i A_loc s} B e^{-i A_loc s} for one operator B, evaluated densely on the
/// union of B's support and the connected part of A_loc, then Pauli-decomposed.
class FrameConjugator {
 public:
  FrameConjugator(const PauliSum& b, const LocalHamiltonian& a_loc, FrameCache* cache = nullptr);

  const std::vector<std::size_t>& sites() const { return sys_->sites; }

  /// The rotated operator at time s.
  PauliSum at(double s) const;

  /// sum_k w_k * at(s_k), accumulated in the frame eigenbasis.
  PauliSum integrate(std::span<const double> times, std::span<const double> weights) const;

 private:
  std::size_t n_;
  std::shared_ptr<const detail::FrameEigensystem> sys_;
  Matrix b_eig_;
};

/// e^{i A_loc s} B_X e^{-i A_loc s} for a single term.
PauliSum conjugate_in_frame(const LocalTerm& b_term, const LocalHamiltonian& a_loc, double s);

/// Quadrature rules used by the Magnus builder.
struct MagnusQuadrature {
  QuadratureRule first = QuadratureRule::gauss_legendre(16);  // Omega_1
  QuadratureRule outer = QuadratureRule::gauss_legendre(12);  // Omega_2, outer integral
  QuadratureRule inner = QuadratureRule::gauss_legendre(12);  // Omega_2, inner integral on [0, s1]
};

/// Per-term frame rotations for a fixed (A, B, R). Omega_1 and Omega_2 are
/// linear and quadratic in alpha, so one builder serves any alpha.
class MagnusBuilder {
 public:
  MagnusBuilder(const LocalHamiltonian& a, const LocalHamiltonian& b, std::size_t radius);

  std::size_t num_qubits() const { return n_; }
  std::size_t radius() const { return radius_; }

  /// Omega_1(h) = -i alpha sum_X sum_k w_k h conj_X(x_k h).
  PauliSum omega1(double alpha, double h, const QuadratureRule& quad) const {
    check_rule(quad);
    return scale(frame_integral(quad, h), cplx(0.0, -alpha));
  }

  /// Omega_2(h) = 1/2 sum_k w_k h [B_I(s_k), int_0^{s_k} B_I], with B_I = -i alpha sum_X conj_X.
  PauliSum omega2(double alpha, double h, const QuadratureRule& outer, const QuadratureRule& inner) const;

 private:
  static void check_rule(const QuadratureRule& q) {
    if (q.order() < 2) throw DomainError("Magnus quadrature needs at least 2 nodes");
  }

  /// sum_X int_0^length conj_X(s) ds by the given rule.
  PauliSum frame_integral(const QuadratureRule& quad, double length) const;

  std::size_t n_;
  std::size_t radius_;
  std::vector<FrameConjugator> conjugators_;
};

PauliSum omega1(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha, double h,
                std::size_t radius, const QuadratureRule& quad = QuadratureRule::gauss_legendre(16));

PauliSum omega2(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha, double h,
                std::size_t radius, const QuadratureRule& outer = QuadratureRule::gauss_legendre(12),
                const QuadratureRule& inner = QuadratureRule::gauss_legendre(12));

struct MagnusDiagnostics {
  std::size_t term_count = 0;
  std::size_t max_support = 0;
  double l1_norm = 0.0;
  /// alpha * ||B||_1 * h > 1: outside the guaranteed convergence domain.
  bool convergence_warning = false;
};

/// One step's light-cone-restricted, truncated Magnus generator.
struct MagnusPlan {
  int q = 1;
  std::size_t radius = 0;
  double step = 0.0;
  double alpha = 0.0;
  MagnusQuadrature quad;
  PauliSum omega;
  MagnusDiagnostics diagnostics;
};

MagnusPlan build_plan(const MagnusBuilder& builder, const LocalHamiltonian& b, double alpha, double h, int q,
                      const MagnusQuadrature& quad = {});

MagnusPlan build_plan(const LocalHamiltonian& a, const LocalHamiltonian& b, double alpha, double h, int q,
                      std::size_t radius, const MagnusQuadrature& quad = {});

}  // namespace ipm

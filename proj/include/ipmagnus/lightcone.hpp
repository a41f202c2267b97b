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

// Light-cone restriction A_{X,R}: keep only the terms of A whose whole support
// lies within lattice distance R of the center set X.

#include <algorithm>
#include <cmath>
#include <vector>

#include "ipmagnus/errors.hpp"
#include "ipmagnus/model.hpp"
#include "ipmagnus/oracle.hpp"

namespace ipm {

struct Restriction {
  std::vector<std::size_t> center;
  std::size_t radius = 0;
  std::vector<std::size_t> kept;  // indices into the base Hamiltonian's terms
  LocalHamiltonian restricted;
};

/// Keeps exactly the terms of `a` all of whose sites are within `r` of some site in `x`.
inline Restriction light_cone_restrict(const LocalHamiltonian& a, std::vector<std::size_t> x, std::size_t r) {
  if (x.empty()) throw DomainError("light-cone center must be nonempty");
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  if (x.back() >= a.num_qubits()) throw DimensionError("light-cone center outside the lattice");
  Restriction out{x, r, {}, LocalHamiltonian(a.lattice())};
  const Lattice1D& lat = a.lattice();
  for (std::size_t k = 0; k < a.terms().size(); ++k) {
    const auto& sites = a.terms()[k].support();
    const bool inside = std::all_of(sites.begin(), sites.end(),
                                    [&](std::size_t s) { return lat.distance_to(s, x) <= r; });
    if (inside) {
      out.kept.push_back(k);
      out.restricted.add(a.terms()[k]);
    }
  }
  return out;
}

struct RadiusPolicy {
  double theta = 2.0;           // additive constant
  double slope_first = 1.0;     // chi multiplier for q = 1
  double slope_general = 8.0;   // chi multiplier for q >= 2
};

/// R = ceil(chi_eff * ln(n t) + theta), clamped to [0, diameter]; chi_eff is
/// chi for q = 1 and 8 chi otherwise. chi = 0 gives ceil(theta).
inline std::size_t choose_radius(std::size_t chi, std::size_t n, double t, double theta, int q,
                                 std::size_t diameter, const RadiusPolicy& policy = {}) {
  if (!(t > 0.0)) throw DomainError("choose_radius needs t > 0");
  if (n < 2) throw DomainError("choose_radius needs n >= 2");
  const double slope = (q <= 1 ? policy.slope_first : policy.slope_general) * static_cast<double>(chi);
  const double raw = chi == 0 ? theta : slope * std::log(static_cast<double>(n) * t) + theta;
  const double r = std::ceil(raw);
  if (r <= 0.0) return 0;
  return std::min(static_cast<std::size_t>(r), diameter);
}

/// Truncation errors at or below this are treated as numerically zero in decay fits.
inline constexpr double kLightConeFloor = 1e-13;

/// Spectral norm of omega_full - omega_loc, evaluated densely (n <= 12).
inline double measure_truncation_error(const PauliSum& omega_full, const PauliSum& omega_loc) {
  check_same_size(omega_full.num_qubits(), omega_loc.num_qubits());
  if (omega_full.num_qubits() > 12) throw OversizedError("truncation error is measured densely for n <= 12");
  const PauliSum diff = omega_full - omega_loc;
  if (diff.empty()) return 0.0;
  return spectral_norm(dense(diff));
}

}  // namespace ipm

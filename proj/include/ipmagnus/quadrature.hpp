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

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ipmagnus/errors.hpp"

namespace ipm {

struct QuadratureNode {
  double x;  // abscissa in [0, 1]
  double w;  // weight; all weights sum to 1
};

/// Gauss-Legendre rule mapped to [0, 1]; exact for polynomials of degree <= 2K - 1.
class QuadratureRule {
 public:
  QuadratureRule() : QuadratureRule(gauss_legendre(16)) {}

  static QuadratureRule gauss_legendre(std::size_t k) {
    if (k < 1) throw DomainError("quadrature needs at least one node");
    QuadratureRule rule(k);
    // Newton iteration on P_k from the Chebyshev-like initial guess.
    const std::size_t half = (k + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
      double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(k) + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * static_cast<double>(j) - 1.0) * z * p1 - (static_cast<double>(j) - 1.0) * p2) /
               static_cast<double>(j);
        }
        dp = static_cast<double>(k) * (z * p0 - p1) / (z * z - 1.0);
        const double step = p0 / dp;
        z -= step;
        if (std::abs(step) < 1e-16) break;
      }
      // Recompute the derivative at the converged root for the weight.
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 1; j <= k; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * static_cast<double>(j) - 1.0) * z * p1 - (static_cast<double>(j) - 1.0) * p2) /
             static_cast<double>(j);
      }
      dp = static_cast<double>(k) * (z * p0 - p1) / (z * z - 1.0);
      const double w = 1.0 / ((1.0 - z * z) * dp * dp);  // half of the [-1, 1] weight
      rule.nodes_[i] = {0.5 * (1.0 - z), w};
      rule.nodes_[k - 1 - i] = {0.5 * (1.0 + z), w};
    }
    return rule;
  }

  std::size_t order() const { return nodes_.size(); }
  const std::vector<QuadratureNode>& nodes() const { return nodes_; }

  /// Integral of f over [0, length].
  template <typename F>
  double integrate(F&& f, double length = 1.0) const {
    double s = 0.0;
    for (const auto& nd : nodes_) s += nd.w * f(nd.x * length);
    return s * length;
  }

  std::string describe() const { return "gauss-legendre K=" + std::to_string(order()); }

 private:
  explicit QuadratureRule(std::size_t k) : nodes_(k) {}

  std::vector<QuadratureNode> nodes_;
};

}  // namespace ipm

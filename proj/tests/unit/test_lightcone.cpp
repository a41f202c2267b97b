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

#include <gtest/gtest.h>

#include "ipmagnus/lightcone.hpp"
#include "ipmagnus/magnus.hpp"

namespace ipm {
namespace {

TEST(LightCone, KeepsTermsWithinRadius) {
  const ModelInstance m = build_ising_perturbed(8, 0);
  const Restriction r0 = light_cone_restrict(m.a, {3, 4}, 0);
  // ZZ on (3,4) plus the two on-site fields.
  EXPECT_EQ(r0.kept.size(), 3u);
  const Restriction r1 = light_cone_restrict(m.a, {3, 4}, 1);
  EXPECT_EQ(r1.kept.size(), 3u + 2u + 2u);
  for (std::size_t k : r1.kept) {
    for (std::size_t s : m.a.terms()[k].support()) EXPECT_LE(m.a.lattice().distance_to(s, {3, 4}), 1u);
  }
  EXPECT_EQ(light_cone_restrict(m.a, {0}, 7).kept.size(), m.a.size());
  EXPECT_THROW(light_cone_restrict(m.a, {}, 1), DomainError);
}

TEST(LightCone, ChooseRadius) {
  EXPECT_EQ(choose_radius(0, 12, 3.0, 2.0, 1, 11), 2u);
  // chi = 1, q = 1: ceil(ln 36 + 2) = 6.
  EXPECT_EQ(choose_radius(1, 12, 3.0, 2.0, 1, 11), 6u);
  EXPECT_EQ(choose_radius(1, 12, 3.0, 2.0, 2, 11), 11u);
  EXPECT_EQ(choose_radius(1, 12, 3.0, 2.0, 1, 4), 4u);
  EXPECT_THROW(choose_radius(1, 12, 0.0, 2.0, 1, 11), DomainError);
}

TEST(LightCone, TruncationErrorVanishesAtDiameter) {
  const ModelInstance m = build_ising_perturbed(6, 1);
  const PauliSum full = omega1(m.a, m.b, 0.05, 1.0, 5);
  EXPECT_EQ(measure_truncation_error(full, omega1(m.a, m.b, 0.05, 1.0, 5)), 0.0);
  double previous = 1e300;
  for (std::size_t r = 0; r <= 5; ++r) {
    const double e = measure_truncation_error(full, omega1(m.a, m.b, 0.05, 1.0, r));
    EXPECT_LE(e, previous * (1 + 1e-9)) << r;
    previous = e;
  }
  EXPECT_GT(measure_truncation_error(full, omega1(m.a, m.b, 0.05, 1.0, 0)), 1e-4);
}

}  // namespace
}  // namespace ipm

// Copyright 2026 The biuniv Authors
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

#include <cmath>

#include "biuniv/closed_form_bounds.hpp"
#include "biuniv/oracle_optimizer.hpp"
#include "doctest.h"

using namespace biuniv;

TEST_SUITE("closed_form_bounds") {
  TEST_CASE("initial coefficient bounds") {
    CHECK(a2_bound(MindaPhi(2, 2), 0.0).value == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK(a2_bound(MindaPhi(2, 2), 1.0).value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(a2_bound(MindaPhi(1, 1), 1.0).value == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-14));
    CHECK(a2_bound(MindaPhi(1, 1), 1.0).branch == Branch::kNone);

    const BoundReport large = a3_bound(MindaPhi(2, 2), 0.0);
    CHECK(large.value == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
    CHECK(large.branch == Branch::kLargeB1);
    CHECK(*large.threshold == doctest::Approx(4.0 / 3.0).epsilon(1e-15));

    const BoundReport small = a3_bound(MindaPhi(0.5, 0.1), 0.0);
    CHECK(small.value == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(small.branch == Branch::kSmallB1);
  }

  TEST_CASE("a3 branches meet at the B1 threshold") {
    // At lambda = 1 the switch sits at B1 = 2/3, where both branches equal
    // B1 / 6 = 1/9.
    for (double b2 : {-1.0, 0.0, 0.3, 2.0}) {
      const MindaPhi phi(2.0 / 3.0, b2);
      const BoundReport at = a3_bound(phi, 1.0);
      CHECK(at.branch == Branch::kLargeB1);
      CHECK(at.value == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
      const BoundReport below = a3_bound(MindaPhi(std::nextafter(2.0 / 3.0, 0.0), b2), 1.0);
      CHECK(below.branch == Branch::kSmallB1);
      CHECK(std::abs(below.value - at.value) <= 1e-14);
    }
  }

  TEST_CASE("fekete coefficient bounds") {
    const BoundReport edge = fekete_a2_bound(MindaPhi(2, 2), 0.0);
    CHECK(edge.value == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK(edge.branch == Branch::kB2WithinB1);
    const MindaPhi power = special_phi(SpecialPhiKind::kPower, 0.5);
    CHECK(fekete_a2_bound(power, 1.0).value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    const BoundReport over = fekete_a2_bound(MindaPhi(1, 3), 0.0);
    CHECK(over.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(over.branch == Branch::kB2ExceedsB1);

    const FeketeFunctionalBound f0 = fekete_functional_bound(MindaPhi(2, 2), 0.0);
    CHECK(f0.report.value == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(f0.delta == 0.0);
    const FeketeFunctionalBound f1 = fekete_functional_bound(MindaPhi(2, 2), 1.0);
    CHECK(f1.report.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(f1.delta == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    const FeketeFunctionalBound f2 = fekete_functional_bound(MindaPhi(1, 2), 0.0);
    CHECK(f2.report.value == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(f2.report.branch == Branch::kB2ExceedsB1);
  }

  TEST_CASE("fekete branches meet at |B2| = B1") {
    for (double lambda : {0.0, 0.4, 1.0}) {
      for (double b1 : {0.3, 1.0, 2.5}) {
        for (double sign : {-1.0, 1.0}) {
          const MindaPhi at(b1, sign * b1);
          const MindaPhi above(b1, sign * std::nextafter(b1, 10.0));
          CHECK(std::abs(fekete_a2_bound(at, lambda).value - fekete_a2_bound(above, lambda).value) <= 1e-14);
          CHECK(std::abs(fekete_functional_bound(at, lambda).report.value -
                         fekete_functional_bound(above, lambda).report.value) <= 1e-14);
        }
      }
    }
  }

  TEST_CASE("lambda = 0 reproduces the starlike-type formulas") {
    for (double b1 : {0.2, 1.0, 1.7, 3.0}) {
      for (double b2 : {-2.0, 0.0, 0.9, 4.0}) {
        const MindaPhi phi(b1, b2);
        const double den = 4.0 * b1 + std::abs(3.0 * b1 * b1 - 4.0 * b2);
        CHECK(a2_bound(phi, 0.0).value == doctest::Approx(b1 * std::sqrt(b1 / den)).epsilon(1e-14));
        const double a3 = b1 >= 4.0 / 3.0 ? (1.0 - 4.0 / (3.0 * b1)) * b1 * b1 * b1 / den + b1 / 3.0 : b1 / 3.0;
        CHECK(a3_bound(phi, 0.0).value == doctest::Approx(a3).epsilon(1e-14));
      }
    }
  }

  TEST_CASE("thresholds") {
    const BetaThresholds t0 = beta_threshold(0.0);
    CHECK(std::abs(t0.theorem_threshold - (11.0 - std::sqrt(37.0)) / 12.0) <= 1e-12);
    CHECK(std::abs(t0.proof_threshold - (1.0 - (1.0 + std::sqrt(21.0)) / 6.0)) <= 1e-12);
    CHECK(t0.proof_threshold == doctest::Approx(0.069566).epsilon(1e-4));
    CHECK_FALSE(t0.theorem_clamped);

    const BetaThresholds t1 = beta_threshold(1.0);
    CHECK(std::abs(t1.theorem_threshold) <= 1e-15);
    CHECK(t1.proof_threshold == 0.0);
    CHECK(t1.proof_clamped);
    CHECK(t1.proof_raw < 0.0);

    for (double lambda : grid_points(0.0, 1.0, 0.01)) {
      const BetaThresholds t = beta_threshold(lambda);
      CHECK(t.theorem_threshold >= 0.0);
      CHECK(t.theorem_threshold < 1.0);
      CHECK(t.proof_threshold <= t.theorem_threshold);
    }
    CHECK_THROWS_AS(beta_threshold(1.5), DomainError);
  }

  TEST_CASE("hankel bound values") {
    CHECK(std::abs(hankel2_bound(ClassParams(0, 0)).value - 1.5) <= 1e-12);
    CHECK(std::abs(hankel2_bound(ClassParams(1, 0)).value - 1.0 / 3.0) <= 1e-12);
    const BoundReport b = hankel2_bound(ClassParams(0, 0.8));
    CHECK(b.branch == Branch::kInteriorCase);
    const double u = 0.2;
    const double closed = u * u * (60 * 0.64 - 84 * 0.8 - 25) / (16 * (9 * 0.64 - 15 * 0.8 + 1));
    CHECK(b.value == doctest::Approx(closed).epsilon(1e-13));
    CHECK(b.value == doctest::Approx(0.025668).epsilon(1e-4));
    CHECK(std::abs(hankel2_interior_value(ClassParams(1, 0)) - 1.0 / 3.0) <= 1e-12);
    CHECK(hankel2_bound(ClassParams(0.5, 0.2)).branch == Branch::kBoundaryCase);
  }

  TEST_CASE("hankel bound branch continuity") {
    for (double lambda : grid_points(0.0, 1.0, 0.01)) {
      const ClassParams at(lambda, beta_threshold(lambda).theorem_threshold);
      CHECK(std::abs(hankel2_boundary_value(at) - hankel2_interior_value(at)) <= 1e-8);
    }
  }

  TEST_CASE("corollaries agree with the general bound") {
    for (double beta : grid_points(0.0, 0.99, 0.01)) {
      CHECK(std::abs(hankel2_bound(ClassParams(0, beta)).value -
                     corollary_bounds(ClassParams(0, beta), Corollary::kHBeta).value) <= 1e-10);
      CHECK(std::abs(hankel2_bound(ClassParams(1, beta)).value -
                     corollary_bounds(ClassParams(1, beta), Corollary::kKBeta).value) <= 1e-10);
    }
    CHECK(corollary_bounds(ClassParams(0, 0), Corollary::kHBeta).value == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(corollary_bounds(ClassParams(1, 0), Corollary::kKBeta).value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(corollary_bounds(ClassParams(0, 0.8), Corollary::kHBeta).value ==
          doctest::Approx(hankel2_bound(ClassParams(0, 0.8)).value).epsilon(1e-12));
    CHECK(corollary_bounds(ClassParams(0, 0), Corollary::kH).value == 1.5);
    CHECK(corollary_bounds(ClassParams(1, 0), Corollary::kK).value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    CHECK_THROWS_AS(corollary_bounds(ClassParams(0.5, 0), Corollary::kHBeta), DomainError);
    CHECK_THROWS_AS(corollary_bounds(ClassParams(0, 0), Corollary::kKBeta), DomainError);
    CHECK_THROWS_AS(corollary_bounds(ClassParams(0, 0.1), Corollary::kH), DomainError);
  }

  TEST_CASE("interior denominator stays away from zero") {
    double smallest = 1e300;
    for (double lambda : grid_points(0.0, 1.0, 0.01)) {
      const double th = beta_threshold(lambda).theorem_threshold;
      for (double beta : grid_points(0.0, 0.999, 0.001)) {
        if (beta > th) smallest = std::min(smallest, std::abs(hankel2_interior_denominator(ClassParams(lambda, beta))));
      }
    }
    CHECK(smallest > 1.0);
  }

  TEST_CASE("bounds are positive and finite") {
    for (double lambda : {0.0, 0.3, 1.0}) {
      for (double beta : {0.0, 0.5, 0.99}) {
        const BoundReport h = hankel2_bound(ClassParams(lambda, beta));
        CHECK(h.value > 0.0);
        CHECK(std::isfinite(h.value));
      }
      for (double b1 : {0.01, 1.0, 5.0}) {
        const MindaPhi phi(b1, -b1 / 2);
        CHECK(a2_bound(phi, lambda).value > 0.0);
        CHECK(a3_bound(phi, lambda).value > 0.0);
        CHECK(fekete_a2_bound(phi, lambda).value > 0.0);
        CHECK(fekete_functional_bound(phi, lambda).report.value > 0.0);
      }
    }
    CHECK_THROWS_AS(a2_bound(MindaPhi(1, 1), -0.5), DomainError);
  }
}

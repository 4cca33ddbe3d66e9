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
#include <cstdlib>

#include "biuniv/closed_form_bounds.hpp"
#include "biuniv/oracle_optimizer.hpp"
#include "biuniv/parallel.hpp"
#include "doctest.h"

using namespace biuniv;

TEST_SUITE("oracle_optimizer") {
  TEST_CASE("grids include both endpoints") {
    const auto g = grid_points(0.0, 1.0, 0.3);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(grid_points(0.0, 2.0, 0.01).size() == 201);
    CHECK(grid_points(0.0, 2.0, 0.01).back() == 2.0);

    const auto r = refinement_points(1.0, 0.0, 1.0, 0.01);
    CHECK(r.size() == 101);
    CHECK(r.back() == 1.0);
    CHECK(r.front() == doctest::Approx(0.99).epsilon(1e-12));
  }

  TEST_CASE("square maximization examples") {
    const OptResult r = maximize_f_on_square(1.0, ClassParams(0, 0), 0.01);
    CHECK(r.max_value == doctest::Approx(0.6875).epsilon(1e-12));
    CHECK(r.argmax[0] == 1.0);
    CHECK(r.argmax[1] == 1.0);
    CHECK(r.refined);
    CHECK(r.resolution[1] == doctest::Approx(1e-4).epsilon(1e-12));

    // Constant objective: every cell ties, the tie-break picks the origin.
    const OptResult flat = maximize_f_on_square(2.0, ClassParams(0.3, 0.4), 0.01);
    CHECK(flat.max_value == doctest::Approx(t_coefficients(2.0, ClassParams(0.3, 0.4)).t1).epsilon(1e-14));
    CHECK(flat.argmax[0] == 0.0);
    CHECK(flat.argmax[1] == 0.0);

    const OptResult zero = maximize_f_on_square(0.0, ClassParams(0, 0), 0.01);
    CHECK(zero.max_value == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
    CHECK(zero.argmax[0] == 1.0);
    CHECK(zero.argmax[1] == 1.0);

    CHECK_THROWS_AS(maximize_f_on_square(1.0, ClassParams(0, 0), 0.1), DomainError);
    CHECK_THROWS_AS(maximize_f_on_square(1.0, ClassParams(0, 0), 0.0), DomainError);
  }

  TEST_CASE("interval maximization examples") {
    const OptResult a = maximize_k_on_interval(ClassParams(0, 0), 0.005);
    CHECK(a.max_value == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(a.argmax[0] == 2.0);

    const OptResult b = maximize_k_on_interval(ClassParams(0, 0.8), 0.005);
    CHECK(std::abs(b.argmax[0] - 1.525857) <= 0.01);
    CHECK(std::abs(b.max_value - hankel2_bound(ClassParams(0, 0.8)).value) <= 1e-8);

    const OptResult c = maximize_k_on_interval(ClassParams(1, 0), 0.005);
    CHECK(c.max_value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(c.argmax[0] == 2.0);

    CHECK_THROWS_AS(maximize_k_on_interval(ClassParams(0, 0), 0.02), DomainError);
  }

  TEST_CASE("hankel oracle examples") {
    const double res = 0.005;
    CHECK(std::abs(hankel_bound_oracle(ClassParams(0, 0), res).max_value - 1.5) <= 1e-5);
    CHECK(std::abs(hankel_bound_oracle(ClassParams(0.5, 0.5), res).max_value -
                   hankel2_bound(ClassParams(0.5, 0.5)).value) <= 1e-5);
    CHECK(std::abs(hankel_bound_oracle(ClassParams(1, 0), res).max_value - 1.0 / 3.0) <= 1e-5);
  }

  TEST_CASE("refined maximum never falls below the coarse maximum") {
    for (double c : {0.1, 0.9, 1.7}) {
      for (double beta : {0.0, 0.5, 0.9}) {
        const OptResult r = maximize_f_on_square(c, ClassParams(0.5, beta), 0.05);
        CHECK(r.max_value >= r.coarse_max);
      }
    }
    const OptResult k = maximize_k_on_interval(ClassParams(0.2, 0.7), 0.01);
    CHECK(k.max_value >= k.coarse_max);
  }

  TEST_CASE("oracle result does not depend on the worker count") {
    const ClassParams p(0.75, 0.4);
    ::setenv("BIUNIV_THREADS", "1", 1);
    const OptResult one = hankel_bound_oracle(p, 0.01);
    ::setenv("BIUNIV_THREADS", "3", 1);
    const OptResult three = hankel_bound_oracle(p, 0.01);
    ::unsetenv("BIUNIV_THREADS");
    CHECK(one.max_value == three.max_value);
    CHECK(one.argmax == three.argmax);
  }

  TEST_CASE("worker count parsing") {
    ::setenv("BIUNIV_THREADS", "2", 1);
    CHECK(worker_count() == 2);
    ::setenv("BIUNIV_THREADS", "0", 1);
    CHECK(worker_count() >= 1);
    ::setenv("BIUNIV_THREADS", "two", 1);
    CHECK_THROWS_AS(worker_count(), DomainError);
    ::unsetenv("BIUNIV_THREADS");
  }

  TEST_CASE("parallel_for covers every index once and rethrows") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) ++hits[i];
    }, 4);
    for (int h : hits) CHECK(h == 1);
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t, std::size_t) { throw NumericalError("boom"); }, 3),
                    NumericalError);
  }
}

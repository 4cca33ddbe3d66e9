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

#include "biuniv/closed_form_bounds.hpp"

#include <algorithm>
#include <cmath>

namespace biuniv {
namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("lambda must lie in [0, 1]");
}

// 4 B1 + |(3 - lambda) B1^2 - 4 B2|
double initial_bound_denominator(const MindaPhi& phi, double lambda) {
  const double b1 = phi.b1();
  return 4.0 * b1 + std::abs((3.0 - lambda) * b1 * b1 - 4.0 * phi.b2());
}

constexpr double kDenominatorFloor = 1e-12;

// Largest double strictly below 1, used as the upper clamp for beta.
const double kBetaCeiling = std::nextafter(1.0, 0.0);

}  // namespace

BoundReport a2_bound(const MindaPhi& phi, double lambda) {
  check_lambda(lambda);
  const double b1 = phi.b1();
  return BoundReport{b1 * std::sqrt(b1) / std::sqrt(initial_bound_denominator(phi, lambda)), Branch::kNone,
                     std::nullopt};
}

BoundReport a3_bound(const MindaPhi& phi, double lambda) {
  check_lambda(lambda);
  const double b1 = phi.b1();
  const double threshold = 4.0 / (3.0 * (1.0 + lambda));
  const double tail = b1 / (3.0 * (1.0 + lambda));
  if (b1 >= threshold) {
    const double weight = 1.0 - 4.0 / (3.0 * (1.0 + lambda) * b1);
    const double value = weight * b1 * b1 * b1 / initial_bound_denominator(phi, lambda) + tail;
    return BoundReport{value, Branch::kLargeB1, threshold};
  }
  return BoundReport{tail, Branch::kSmallB1, threshold};
}

BoundReport fekete_a2_bound(const MindaPhi& phi, double lambda) {
  check_lambda(lambda);
  const double b1 = phi.b1();
  const double abs_b2 = std::abs(phi.b2());
  if (abs_b2 <= b1) return BoundReport{std::sqrt(b1 / (3.0 - lambda)), Branch::kB2WithinB1, b1};
  return BoundReport{std::sqrt(abs_b2 / (3.0 - lambda)), Branch::kB2ExceedsB1, b1};
}

double fekete_delta(double lambda) {
  check_lambda(lambda);
  return 4.0 * lambda / (3.0 + 3.0 * lambda);
}

FeketeFunctionalBound fekete_functional_bound(const MindaPhi& phi, double lambda) {
  const double delta = fekete_delta(lambda);
  const double b1 = phi.b1();
  const double abs_b2 = std::abs(phi.b2());
  const double scale = 3.0 + 3.0 * lambda;
  if (abs_b2 <= b1) return {BoundReport{b1 / scale, Branch::kB2WithinB1, b1}, delta};
  return {BoundReport{abs_b2 / scale, Branch::kB2ExceedsB1, b1}, delta};
}

BetaThresholds beta_threshold(double lambda) {
  check_lambda(lambda);
  const double l1 = 1.0 + lambda;
  const double l2 = 1.0 + 2.0 * lambda;
  const double m = 2.0 - lambda;

  BetaThresholds out;
  out.theorem_raw = 1.0 - (l2 + std::sqrt(l2 * l2 + 18.0 * l1 * l1 * m)) / (6.0 * l1 * m);
  out.proof_raw = 1.0 - (l2 + std::sqrt(l2 * l2 + m * (18.0 * l1 * l1 - 8.0 * l2))) / (3.0 * l1 * m);

  auto clamp = [](double raw, bool& flag) {
    const double v = std::clamp(raw, 0.0, kBetaCeiling);
    flag = v != raw;
    return v;
  };
  out.theorem_threshold = clamp(out.theorem_raw, out.theorem_clamped);
  out.proof_threshold = clamp(out.proof_raw, out.proof_clamped);
  return out;
}

double hankel2_boundary_value(const ClassParams& params) {
  const double lambda = params.lambda();
  const double u = 1.0 - params.beta();
  return u * u / (2.0 * (1.0 + 2.0 * lambda)) * ((2.0 - lambda) * u * u + 1.0);
}

double hankel2_interior_denominator(const ClassParams& params) {
  const double lambda = params.lambda();
  const double u = 1.0 - params.beta();
  const double l1 = 1.0 + lambda;
  const double l2 = 1.0 + 2.0 * lambda;
  return 9.0 * l1 * l1 * (2.0 - lambda) * u * u - 6.0 * l1 * l2 * u + 8.0 * l2 - 18.0 * l1 * l1;
}

double hankel2_interior_value(const ClassParams& params) {
  const double lambda = params.lambda();
  const double u = 1.0 - params.beta();
  const double l1 = 1.0 + lambda;
  const double l2 = 1.0 + 2.0 * lambda;
  const double numerator = 36.0 * (8.0 * l2 * (2.0 - lambda) - l2 * l2) * u * u - 324.0 * l1 * l2 * u +
                           288.0 * l2 - 729.0 * l1 * l1;
  const double denominator = hankel2_interior_denominator(params);
  if (std::abs(denominator) < kDenominatorFloor) {
    throw NumericalError("hankel2 interior formula: degenerate denominator");
  }
  return u * u / (72.0 * l2) * (numerator / denominator);
}

BoundReport hankel2_bound(const ClassParams& params) {
  const double threshold = beta_threshold(params.lambda()).theorem_threshold;
  if (params.beta() <= threshold) {
    return BoundReport{hankel2_boundary_value(params), Branch::kBoundaryCase, threshold};
  }
  return BoundReport{hankel2_interior_value(params), Branch::kInteriorCase, threshold};
}

BoundReport corollary_bounds(const ClassParams& params, Corollary which) {
  const double beta = params.beta();
  const bool needs_h = which == Corollary::kHBeta || which == Corollary::kH;
  const bool fixes_beta = which == Corollary::kH || which == Corollary::kK;
  if (params.lambda() != (needs_h ? 0.0 : 1.0)) {
    throw DomainError(needs_h ? "corollary for H_sigma requires lambda = 0"
                              : "corollary for K_sigma requires lambda = 1");
  }
  if (fixes_beta && beta != 0.0) throw DomainError("corollary for beta = 0 called with beta != 0");

  switch (which) {
    case Corollary::kH:
      return BoundReport{1.5, Branch::kNone, std::nullopt};
    case Corollary::kK:
      return BoundReport{1.0 / 3.0, Branch::kNone, std::nullopt};
    case Corollary::kHBeta: {
      const double threshold = (11.0 - std::sqrt(37.0)) / 12.0;
      const double u = 1.0 - beta;
      if (beta <= threshold) {
        return BoundReport{u * u * (1.0 + 2.0 * u * u) / 2.0, Branch::kBoundaryCase, threshold};
      }
      const double value =
          u * u * (60.0 * beta * beta - 84.0 * beta - 25.0) / (16.0 * (9.0 * beta * beta - 15.0 * beta + 1.0));
      return BoundReport{value, Branch::kInteriorCase, threshold};
    }
    case Corollary::kKBeta: {
      const double u = 1.0 - beta;
      const double value =
          u * u / 24.0 * ((5.0 * beta * beta + 8.0 * beta - 32.0) / (3.0 * beta * beta - 3.0 * beta - 4.0));
      return BoundReport{value, Branch::kInteriorCase, 0.0};
    }
  }
  throw DomainError("corollary_bounds: unknown corollary");
}

}  // namespace biuniv

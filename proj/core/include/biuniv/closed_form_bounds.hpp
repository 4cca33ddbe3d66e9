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

#pragma once

// Published coefficient bounds for G^lambda_sigma(phi) and G^lambda_sigma(beta).
//
// Every function here evaluates a closed-form expression. Nothing in this
// header calls the optimizer or the sampler; those are the independent routes
// the bounds are checked against.
//
// The convex subclass K_sigma(phi) is lambda = 1, so its a3 bound is
// a3_bound(phi, 1.0) with small-B1 branch B1 / 6.

#include "biuniv/minda_core.hpp"

namespace biuniv {

/// |a2| <= B1 sqrt(B1) / sqrt(4 B1 + |(3 - lambda) B1^2 - 4 B2|).
BoundReport a2_bound(const MindaPhi& phi, double lambda);

/// Two-branch |a3| bound, switching at B1 = 4 / (3 (1 + lambda)). The switch
/// point is reported as the threshold; ties go to the large-B1 branch.
BoundReport a3_bound(const MindaPhi& phi, double lambda);

/// |a2| <= sqrt(max(B1, |B2|) / (3 - lambda)); threshold is B1 (compared with |B2|).
BoundReport fekete_a2_bound(const MindaPhi& phi, double lambda);

struct FeketeFunctionalBound {
  BoundReport report;
  double delta = 0.0;  // the functional is |a3 - delta a2^2|
};

/// |a3 - delta a2^2| <= max(B1, |B2|) / (3 + 3 lambda) with delta = 4 lambda / (3 + 3 lambda).
FeketeFunctionalBound fekete_functional_bound(const MindaPhi& phi, double lambda);

/// Fekete-Szego coefficient delta = 4 lambda / (3 + 3 lambda).
double fekete_delta(double lambda);

struct BetaThresholds {
  double theorem_threshold = 0.0;  // operative branch switch of hankel2_bound
  double proof_threshold = 0.0;    // sign change of the quartic coefficient of K
  bool theorem_clamped = false;
  bool proof_clamped = false;
  double theorem_raw = 0.0;  // values before clamping to [0, 1)
  double proof_raw = 0.0;
};

/// Both beta switch points for a given lambda.
///
/// theorem: 1 - [(1+2L) + sqrt((1+2L)^2 + 18 (1+L)^2 (2-L))] / (6 (1+L) (2-L))
/// proof:   1 - [(1+2L) + sqrt((1+2L)^2 + (2-L) (18 (1+L)^2 - 8 (1+2L)))] / (3 (1+L) (2-L))
///
/// The proof value goes negative for lambda near 1 (about -0.758 at lambda = 1);
/// both are clamped to [0, 1) and the clamp is flagged.
BetaThresholds beta_threshold(double lambda);

/// Boundary-case value (1-beta)^2 / (2 (1+2L)) * [(2-L) (1-beta)^2 + 1] = K(2).
double hankel2_boundary_value(const ClassParams& params);

/// Interior-case rational formula (the maximum of K at its critical point).
/// Throws NumericalError if the denominator is (numerically) zero.
double hankel2_interior_value(const ClassParams& params);

/// Denominator of the interior formula:
/// 9 (1+L)^2 (2-L) (1-beta)^2 - 6 (1+L) (1+2L) (1-beta) + 8 (1+2L) - 18 (1+L)^2.
double hankel2_interior_denominator(const ClassParams& params);

/// Bound on |a2 a4 - a3^2|, branching on the theorem threshold (beta <= threshold
/// selects the boundary case).
BoundReport hankel2_bound(const ClassParams& params);

enum class Corollary {
  kHBeta,  // lambda = 0, any beta
  kKBeta,  // lambda = 1, any beta
  kH,      // lambda = 0, beta = 0
  kK,      // lambda = 1, beta = 0
};

/// Closed form for one of the four special classes, evaluated directly.
/// Throws DomainError if params do not match the corollary's class.
BoundReport corollary_bounds(const ClassParams& params, Corollary which);

}  // namespace biuniv

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

// Brute-force maximizers for the objectives of the Hankel argument.
//
// Every search is a dense grid with step `resolution` over a closed box
// (endpoints always included), followed by one refinement grid with step
// resolution / 100 over [argmax - resolution, argmax + resolution] clipped
// to the box. Grid cells within kTieTolerance of the maximum are tied and the
// lexicographically smallest coordinate wins, so results are reproducible
// and independent of how grid evaluation is split across threads.
//
// Nothing here reads the closed-form bounds.

#include <vector>

#include "biuniv/minda_core.hpp"
#include "biuniv/proof_pipeline.hpp"

namespace biuniv {

inline constexpr double kMaxSquareResolution = 0.05;
inline constexpr double kMaxIntervalResolution = 0.01;
inline constexpr double kTieTolerance = 1e-12;
inline constexpr int kRefinementFactor = 100;

struct OptResult {
  double max_value = 0.0;
  std::vector<double> argmax;      // coordinates in objective order
  std::vector<double> resolution;  // {coarse step, refinement step}
  bool refined = false;
  double coarse_max = 0.0;  // best value on the coarse grid alone
};

/// lo, lo + step, ..., with hi appended exactly.
std::vector<double> grid_points(double lo, double hi, double step);

/// center + k * step / 100 for |k| <= 100, restricted to [lo, hi].
std::vector<double> refinement_points(double center, double lo, double hi, double step);

/// max of F(g1, g2) over [0, 1]^2 for fixed c. resolution must be in (0, 0.05].
OptResult maximize_f_on_square(double c, const ClassParams& params, double resolution);
OptResult maximize_f_on_square(const ProofCoefficients& t, double resolution);

/// max of K(c) over [0, 2]. resolution must be in (0, 0.01].
OptResult maximize_k_on_interval(const ClassParams& params, double resolution);

/// max over c in [0, 2] of the square maximum of F; argmax is {c, g1, g2}.
/// resolution must be in (0, 0.01].
OptResult hankel_bound_oracle(const ClassParams& params, double resolution);

}  // namespace biuniv

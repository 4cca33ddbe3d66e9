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

// Admissible coefficient tuples for the auxiliary functions of the coefficient
// arguments, and the functionals evaluated on the reconstructed (a2, a3, a4).
//
// Two generators:
//   * Caratheodory pairs (p, q) for G^lambda_sigma(beta): p is drawn through the
//     Grenander-Szego representation, (a2, a3, a4) follow from p, q is then
//     forced by the inverse-function equations and the draw is kept only if q
//     is itself admissible.
//   * Schwarz prefixes (b1, b2) for G^lambda_sigma(phi): (a2, a3) follow from
//     u, and the companion v-prefix forced by the sum equation must be
//     admissible.
//
// Both work at the level of coefficient prefixes, a relaxation of the function
// class. Maxima of the functionals are therefore lower estimates of the true
// suprema and are only ever compared one-sidedly with the bounds.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "biuniv/minda_core.hpp"

namespace biuniv {

inline constexpr double kAdmissibilityTol = 1e-12;

/// splitmix64 finalizer applied to (seed, index); distinct indices give
/// statistically independent sub-streams.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Deterministic uniform variates built from raw mt19937_64 output, so the
/// sample sequence does not depend on the standard library's distributions.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed, std::uint64_t index = 0);

  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi]
  Complex disk(double radius = 1.0);     // uniform on the closed disk

 private:
  std::mt19937_64 engine_;
};

/// Coefficients (c1, c2, c3) from c1 and the Grenander-Szego parameters:
///   2 c2 = c1^2 + x (4 - c1^2)
///   4 c3 = c1^3 + 2 c1 (4 - c1^2) x - c1 (4 - c1^2) x^2 + 2 (4 - c1^2) (1 - |x|^2) z
CaratheodoryPrefix grenander_prefix(double c1, const GrenanderParams& g);

/// Slack in each membership inequality (nonnegative means satisfied).
struct Admissibility {
  bool admissible = false;
  double c1_slack = 0.0;  // min(c1, 2 - c1)
  double c2_slack = 0.0;  // (4 - c1^2) - |2 c2 - c1^2|
  double c3_slack = 0.0;  // 2 (4 - c1^2) (1 - |x|^2) - |4 c3 - c1^3 - 2 c1 (4-c1^2) x + c1 (4-c1^2) x^2|
};

/// Membership of (c1, c2, c3) in the coefficient body of the Caratheodory
/// class, by inverting the Grenander-Szego representation. At c1 = 2 (within
/// tol) the only admissible prefix is (2, 2, 2).
Admissibility prefix_is_admissible(const CaratheodoryPrefix& prefix, double tol = kAdmissibilityTol);

struct CoefficientTriple {
  Complex first{};
  Complex second{};
  Complex third{};
};

/// Rotates p(z) -> p(e^{i theta} z) so the first coefficient becomes |first|.
/// Absent if |first| > 2 (no Caratheodory function has such a prefix).
std::optional<CaratheodoryPrefix> rotate_to_normal_form(const CoefficientTriple& coeffs);

struct AdmissiblePair {
  CaratheodoryPrefix p_prefix;
  CoefficientTriple q_prefix;  // (d1, d2, d3) with d1 = -c1
  TaylorPrefix taylor;
  ClassParams params;
};

/// Reconstructs (a2, a3, a4) and the q-prefix from a p-prefix. Absent if the
/// induced q-prefix is not admissible.
std::optional<AdmissiblePair> build_pair(const CaratheodoryPrefix& p, const ClassParams& params);

/// One rejection-sampling draw: c1 ~ U[0, 2], x, z ~ U(closed unit disk).
std::optional<AdmissiblePair> sample_pair(SeedStream& stream, const ClassParams& params);

/// Max absolute residual of the six defining coefficient equations.
double system_residual(const AdmissiblePair& pair);

/// Max absolute residual of the closed a3 and a4 formulas written in terms of
/// c1, c2 - d2 and c3 - d3.
double combined_formula_residual(const AdmissiblePair& pair);

struct SchwarzReconstruction {
  Complex a2{};
  Complex a3{};
  Complex s2{};  // second coefficient of the companion Schwarz function v
};

/// a2 = B1 b1 / 2, a3 from the u-equation, s2 from the summed equation.
/// Absent if |s2| > 1 - |b1|^2 (beyond kAdmissibilityTol).
std::optional<SchwarzReconstruction> schwarz_pair(const SchwarzPrefix& b, const MindaPhi& phi, double lambda);

/// a3 recomputed from the difference equation 6(1+L) a3 = 6(1+L) a2^2 + B1 (b2 - s2).
Complex schwarz_a3_from_difference(const SchwarzReconstruction& r, const SchwarzPrefix& b, const MindaPhi& phi,
                                   double lambda);

/// b1 ~ U(unit disk), b2 ~ U(disk of radius 1 - |b1|^2).
SchwarzPrefix sample_schwarz_prefix(SeedStream& stream);

/// |a2 a4 - a3^2|
double hankel2_functional(const TaylorPrefix& t);

/// |a3 - delta a2^2|
double fekete_functional(const TaylorPrefix& t, double delta);

// ---------------------------------------------------------------------------
// Batch sampling
//
// Draws are grouped in chunks of kChunkDraws; chunk k reads sub-stream
// (seed, k). Chunks are consumed in index order and the last one is truncated
// at the target, so the statistics depend on (seed, target) only and never on
// the number of worker threads.

inline constexpr std::size_t kChunkDraws = 4096;

struct HankelSampleStats {
  std::size_t accepted = 0;
  std::size_t draws = 0;
  double max_functional = 0.0;
  std::optional<AdmissiblePair> argmax;
  double max_system_residual = 0.0;
  double max_combined_residual = 0.0;

  double acceptance_rate() const noexcept {
    return draws == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(draws);
  }
};

/// Samples until `target` pairs are accepted or `max_draws` is exhausted
/// (0 selects 1000 * target).
HankelSampleStats sample_hankel(const ClassParams& params, std::size_t target, std::uint64_t seed,
                                std::size_t max_draws = 0);

struct SchwarzSampleStats {
  std::size_t accepted = 0;
  std::size_t draws = 0;
  double delta = 0.0;
  double max_abs_a2 = 0.0;
  double max_abs_a3 = 0.0;
  double max_fekete = 0.0;  // max |a3 - delta a2^2|
  std::optional<SchwarzPrefix> argmax_a2;
  std::optional<SchwarzPrefix> argmax_a3;
  std::optional<SchwarzPrefix> argmax_fekete;
  double max_a3_route_gap = 0.0;  // |a3(u-equation) - a3(difference equation)|
};

SchwarzSampleStats sample_schwarz(const MindaPhi& phi, double lambda, std::size_t target, std::uint64_t seed,
                                  std::size_t max_draws = 0);

}  // namespace biuniv

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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. All tolerances are fixed here.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "biuniv/caratheodory_sampler.hpp"
#include "biuniv/closed_form_bounds.hpp"
#include "biuniv/minda_core.hpp"
#include "biuniv/oracle_optimizer.hpp"
#include "biuniv/proof_pipeline.hpp"
#include "report.hpp"
#include "support/series_oracle.hpp"

namespace {

using namespace biuniv;

constexpr double kExactTol = 1e-12;
constexpr double kCorollaryTol = 1e-10;
constexpr double kOracleResolution = 0.005;
constexpr double kOracleSlack = 1e-8;
constexpr double kArgmaxTol = 0.01;
constexpr double kSquareResolution = 0.01;
constexpr double kSamplerSlack = 1e-9;
constexpr double kLemmaSlack = 1e-12;
constexpr double kSeriesTol = 1e-12;
constexpr std::size_t kSamplesPerPoint = 100000;
constexpr std::size_t kLemmaSamples = 100000;
constexpr std::size_t kSeriesSamples = 1000;
constexpr std::uint64_t kSeed = 42;

const std::vector<double> kLatticeLambdas{0.0, 0.25, 0.5, 0.75, 1.0};
const std::vector<double> kLatticeBetas{0.0, 0.2, 0.4, 0.6, 0.8};

struct Outcome {
  bool passed = true;
  std::string detail;
};

int failures = 0;

void print_outcome(int id, const char* name, const Outcome& o) {
  std::printf("%s criterion %d: %s (%s)\n", o.passed ? "PASS" : "FAIL", id, name, o.detail.c_str());
  std::fflush(stdout);
  if (!o.passed) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Outcome corollary_values() {
  const double h = std::abs(hankel2_bound(ClassParams(0, 0)).value - 1.5);
  const double k = std::abs(hankel2_bound(ClassParams(1, 0)).value - 1.0 / 3.0);
  return {h <= kExactTol && k <= kExactTol, fmt("|err| = %.3g at (0,0), %.3g at (1,0)", h, k)};
}

Outcome threshold_reproduction() {
  const BetaThresholds t = beta_threshold(0.0);
  const double err = std::abs(t.theorem_threshold - (11.0 - std::sqrt(37.0)) / 12.0);
  // The H-beta closed form must switch branches at the same point.
  const double just_below = std::nextafter(t.theorem_threshold, 0.0);
  const double just_above = std::nextafter(t.theorem_threshold, 1.0);
  const bool split = hankel2_bound(ClassParams(0, just_below)).branch == Branch::kBoundaryCase &&
                     hankel2_bound(ClassParams(0, just_above)).branch == Branch::kInteriorCase &&
                     corollary_bounds(ClassParams(0, just_below), Corollary::kHBeta).branch == Branch::kBoundaryCase &&
                     corollary_bounds(ClassParams(0, just_above), Corollary::kHBeta).branch == Branch::kInteriorCase;
  return {err <= kExactTol && split, fmt("|err| = %.3g, case split ", err) + (split ? "matches" : "differs")};
}

Outcome algebraic_consistency() {
  double worst = 0.0;
  for (int i = 0; i <= 99; ++i) {
    const double beta = i / 100.0;
    worst = std::max(worst, std::abs(hankel2_bound(ClassParams(0, beta)).value -
                                     corollary_bounds(ClassParams(0, beta), Corollary::kHBeta).value));
    worst = std::max(worst, std::abs(hankel2_bound(ClassParams(1, beta)).value -
                                     corollary_bounds(ClassParams(1, beta), Corollary::kKBeta).value));
  }
  const double interior = std::abs(hankel2_interior_value(ClassParams(1, 0)) - 1.0 / 3.0);
  return {worst <= kCorollaryTol && interior <= kExactTol,
          fmt("max corollary gap %.3g, interior formula at (1,0) off by %.3g", worst, interior)};
}

Outcome oracle_agreement() {
  double worst_gap = 0.0;
  double worst_loc = 0.0;
  bool tags_ok = true;
  const double tol = 5.0 * kOracleResolution * kOracleResolution + kOracleSlack;
  for (double lambda : kLatticeLambdas) {
    for (double beta : kLatticeBetas) {
      const ClassParams p(lambda, beta);
      worst_gap = std::max(worst_gap,
                           std::abs(hankel_bound_oracle(p, kOracleResolution).max_value - hankel2_bound(p).value));
      const OptResult k = maximize_k_on_interval(p, kOracleResolution);
      const CaseClassification cls = case_classification(p);
      worst_loc = std::max(worst_loc, std::abs(k.argmax[0] - cls.argmax_prediction));
      if ((cls.tag == CaseTag::kBoundary) != (cls.argmax_prediction == 2.0)) tags_ok = false;
    }
  }
  return {worst_gap <= tol && worst_loc <= kArgmaxTol && tags_ok,
          fmt("max |oracle - bound| %.3g (tol %.3g), max argmax offset %.3g", worst_gap, tol, worst_loc)};
}

Outcome corner_dominance() {
  std::size_t points = 0;
  std::size_t violations = 0;
  double worst_excess = 0.0;
  for (double lambda : grid_points(0, 1, 0.1)) {
    for (double beta : grid_points(0, 0.95, 0.05)) {
      const ClassParams p(lambda, beta);
      for (double c : grid_points(0, 2, 0.01)) {
        if (c <= 0.0 || c >= 2.0) continue;
        ++points;
        const ProofCoefficients t = t_coefficients(c, p);
        const OptResult r = maximize_f_on_square(t, kSquareResolution);
        const double dist = std::hypot(r.argmax[0] - 1.0, r.argmax[1] - 1.0);
        const double excess = r.max_value - evaluate_f(t, 1.0, 1.0);
        worst_excess = std::max(worst_excess, excess);
        if (dist > r.resolution[1] * (1 + 1e-9) || excess > kTieTolerance) ++violations;
      }
    }
  }
  return {violations == 0, fmt("%.0f lattice points, %.0f violations, max excess over F(1,1) %.3g",
                               static_cast<double>(points), static_cast<double>(violations), worst_excess)};
}

Outcome proof_signs() {
  std::size_t violations = 0;
  std::size_t interior = 0;
  for (double lambda : grid_points(0, 1, 0.1)) {
    for (double beta : grid_points(0, 0.95, 0.05)) {
      const ClassParams p(lambda, beta);
      for (double c : grid_points(0, 2, 0.01)) {
        const ProofCoefficients t = t_coefficients(c, p);
        if (t.t1 < 0 || t.t2 < 0 || t.t3 > 0 || t.t4 < 0) ++violations;
        if (t.t2 + t.t3 + 3 * t.t4 < 0) ++violations;
        if (c > 0 && c < 2 && !(t.t3 + 2 * t.t4 > 0)) ++violations;
      }
      const CaseClassification cls = case_classification(p);
      if (cls.tag == CaseTag::kInterior) {
        ++interior;
        const double c0 = cls.argmax_prediction;
        const double h = 1e-4;
        const double second = (k_polynomial(c0 + h, p) - 2 * k_polynomial(c0, p) + k_polynomial(c0 - h, p)) / (h * h);
        if (!(second < 0)) ++violations;
      }
    }
  }
  return {violations == 0, fmt("%.0f violations, concavity checked at %.0f interior points",
                               static_cast<double>(violations), static_cast<double>(interior))};
}

Outcome sampler_bounds() {
  double worst = -1e300;
  bool counts_ok = true;
  for (double lambda : kLatticeLambdas) {
    for (double beta : kLatticeBetas) {
      const ClassParams p(lambda, beta);
      const HankelSampleStats s = sample_hankel(p, kSamplesPerPoint, kSeed);
      counts_ok = counts_ok && s.accepted == kSamplesPerPoint;
      worst = std::max(worst, s.max_functional - hankel2_bound(p).value);
    }
  }
  const std::vector<MindaPhi> phis{special_phi(SpecialPhiKind::kLinearOrder, 0.0),
                                   special_phi(SpecialPhiKind::kLinearOrder, 0.5),
                                   special_phi(SpecialPhiKind::kPower, 0.5),
                                   MindaPhi(1.0, 3.0),
                                   MindaPhi(0.5, 0.1),
                                   MindaPhi(2.0, -1.0)};
  double worst_schwarz = -1e300;
  for (const MindaPhi& phi : phis) {
    for (double lambda : kLatticeLambdas) {
      const SchwarzSampleStats s = sample_schwarz(phi, lambda, kSamplesPerPoint, kSeed);
      counts_ok = counts_ok && s.accepted == kSamplesPerPoint;
      worst_schwarz = std::max({worst_schwarz, s.max_abs_a2 - a2_bound(phi, lambda).value,
                                s.max_abs_a3 - a3_bound(phi, lambda).value,
                                s.max_abs_a2 - fekete_a2_bound(phi, lambda).value,
                                s.max_fekete - fekete_functional_bound(phi, lambda).report.value});
    }
  }
  return {counts_ok && worst <= kSamplerSlack && worst_schwarz <= kSamplerSlack,
          fmt("max(empirical - bound): hankel %.3g, schwarz %.3g", worst, worst_schwarz)};
}

Outcome lemma_round_trips() {
  SeedStream stream(kSeed, 0xACCE55ULL);
  std::size_t violations = 0;
  for (std::size_t i = 0; i < kLemmaSamples; ++i) {
    const double c1 = stream.uniform(0.0, 2.0);
    const GrenanderParams g(stream.disk(), stream.disk());
    const CaratheodoryPrefix p = grenander_prefix(c1, g);
    const double half = c1 * c1 / 2.0;
    if (!prefix_is_admissible(p).admissible) ++violations;
    if (std::abs(p.c2()) > 2 + kLemmaSlack || std::abs(p.c3()) > 2 + kLemmaSlack) ++violations;
    if (std::abs(p.c2() - half) > 2 - half + kLemmaSlack) ++violations;
  }
  return {violations == 0, fmt("%.0f prefixes, %.0f violations", static_cast<double>(kLemmaSamples),
                               static_cast<double>(violations))};
}

Outcome inverse_series_identity() {
  SeedStream stream(kSeed, 0x5E41E5ULL);
  double worst = 0.0;
  for (std::size_t i = 0; i < kSeriesSamples; ++i) {
    const TaylorPrefix t{stream.disk(2.0), stream.disk(3.0), stream.disk(4.0)};
    const InverseCoeffs inv = inverse_prefix(t);
    const auto id = testing::compose(testing::normalized(inv.a2, inv.a3, inv.a4),
                                     testing::normalized(t.a2, t.a3, t.a4));
    worst = std::max({worst, std::abs(id[0]), std::abs(id[1] - 1.0), std::abs(id[2]), std::abs(id[3]),
                      std::abs(id[4])});
  }
  return {worst <= kSeriesTol, fmt("max coefficient residual %.3g", worst)};
}

Outcome cli_determinism() {
  report::RunConfig c;
  c.command = report::Command::kSweep;
  c.samples = 20000;
  c.seed = kSeed;
  const std::string first = report::cmd_sweep(c);
  const std::string second = report::cmd_sweep(c);
  ::setenv("BIUNIV_THREADS", "3", 1);
  const std::string threaded = report::cmd_sweep(c);
  ::unsetenv("BIUNIV_THREADS");
  const bool same = first == second && first == threaded;
  return {same, fmt("%.0f bytes, repeated and 3-worker runs ", static_cast<double>(first.size())) +
                    (same ? "identical" : "differ")};
}

}  // namespace

int main() {
  print_outcome(1, "corollary values exact", corollary_values());
  print_outcome(2, "threshold reproduction", threshold_reproduction());
  print_outcome(3, "algebraic consistency", algebraic_consistency());
  print_outcome(4, "oracle agreement", oracle_agreement());
  print_outcome(5, "corner dominance", corner_dominance());
  print_outcome(6, "proof sign suite", proof_signs());
  print_outcome(7, "sampler one-sided bounds", sampler_bounds());
  print_outcome(8, "lemma round-trips", lemma_round_trips());
  print_outcome(9, "inverse-series identity", inverse_series_identity());
  print_outcome(10, "CLI determinism", cli_determinism());
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

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

#include "biuniv/proof_pipeline.hpp"

#include <cmath>

#include "biuniv/closed_form_bounds.hpp"

namespace biuniv {
namespace {

void check_c(double c) {
  if (!(c >= 0.0 && c <= 2.0)) throw DomainError("c must lie in [0, 2]");
}

void check_gamma(double g) {
  if (!(g >= 0.0 && g <= 1.0)) throw DomainError("gamma must lie in [0, 1]");
}

struct Factors {
  double u;   // 1 - beta
  double l1;  // 1 + lambda
  double l2;  // 1 + 2 lambda
  double m;   // 2 - lambda
};

Factors factors(const ClassParams& p) {
  return {1.0 - p.beta(), 1.0 + p.lambda(), 1.0 + 2.0 * p.lambda(), 2.0 - p.lambda()};
}

// c^2 coefficient inside the braces of K(c).
double k_quadratic_coefficient(const Factors& f) {
  return 24.0 * f.u * f.l1 * f.l2 + 108.0 * f.l1 * f.l1 - 64.0 * f.l2;
}

constexpr double kConsistencyTol = 1e-12;

}  // namespace

ProofCoefficients t_coefficients(double c, const ClassParams& params) {
  check_c(c);
  const auto [u, l1, l2, m] = factors(params);
  const double u2 = u * u;
  const double c2 = c * c;
  const double c4 = c2 * c2;
  const double w = 4.0 - c2;

  ProofCoefficients t;
  t.c = c;
  t.params = params;
  t.t1 = m * u2 * u2 / (32.0 * l2) * c4 + u2 * c4 / (32.0 * l2) + u2 * c * w / (16.0 * l2);
  t.t2 = u2 * u * c2 * w / (96.0 * l1) + u2 * c2 * w / (32.0 * l2);
  t.t3 = u2 * c2 * w / (64.0 * l2) - u2 * c * w / (32.0 * l2);
  t.t4 = u2 * w * w / (144.0 * l1 * l1);
  return t;
}

double f_value(double g1, double g2, double c, const ClassParams& params) {
  check_gamma(g1);
  check_gamma(g2);
  return evaluate_f(t_coefficients(c, params), g1, g2);
}

double g_edge(const ProofCoefficients& t, double g) noexcept {
  return t.t1 + t.t2 * g + (t.t3 + t.t4) * g * g;
}

double h_edge(const ProofCoefficients& t, double g) noexcept {
  return (t.t3 + t.t4) * g * g + (t.t2 + 2.0 * t.t4) * g + t.t1 + t.t2 + t.t3 + t.t4;
}

double k_quartic_coefficient(const ClassParams& params) noexcept {
  const auto [u, l1, l2, m] = factors(params);
  return 9.0 * u * u * l1 * l1 * m - 6.0 * u * l1 * l2 - 18.0 * l1 * l1 + 8.0 * l2;
}

double k_polynomial(double c, const ClassParams& params) noexcept {
  const Factors f = factors(params);
  const double c2 = c * c;
  const double braces =
      k_quartic_coefficient(params) * c2 * c2 + k_quadratic_coefficient(f) * c2 + 128.0 * f.l2;
  return f.u * f.u / (288.0 * f.l1 * f.l1 * f.l2) * braces;
}

double k_prime_polynomial(double c, const ClassParams& params) noexcept {
  const auto [u, l1, l2, m] = factors(params);
  const double linear = 12.0 * u * l1 * l2 + 54.0 * l1 * l1 - 32.0 * l2;
  const double braces = k_quartic_coefficient(params) * c * c * c + linear * c;
  return u * u / (72.0 * l1 * l1 * l2) * braces;
}

KValues k_values(double c, const ClassParams& params) {
  const ProofCoefficients t = t_coefficients(c, params);
  const double expanded = k_polynomial(c, params);
  const double assembled = t.t1 + 2.0 * t.t2 + 2.0 * t.t3 + 4.0 * t.t4;
  if (std::abs(expanded - assembled) > kConsistencyTol * (1.0 + std::abs(assembled))) {
    throw NumericalError("K(c): expanded polynomial disagrees with T1 + 2T2 + 2T3 + 4T4");
  }
  return KValues{expanded, k_prime_polynomial(c, params)};
}

std::optional<double> critical_point(const ClassParams& params) {
  const auto [u, l1, l2, m] = factors(params);
  const double numerator = -12.0 * l1 * l2 * u - 54.0 * l1 * l1 + 32.0 * l2;
  const double denominator = 9.0 * u * u * l1 * l1 * m - 6.0 * u * l1 * l2 - 18.0 * l1 * l1 + 8.0 * l2;
  if (denominator == 0.0) return std::nullopt;
  const double ratio = numerator / denominator;
  if (!std::isfinite(ratio) || ratio < 0.0) return std::nullopt;
  return std::sqrt(ratio);
}

std::string_view to_string(CaseTag tag) noexcept {
  return tag == CaseTag::kBoundary ? "boundary" : "interior";
}

std::string_view to_string(CaseMechanism mechanism) noexcept {
  switch (mechanism) {
    case CaseMechanism::kIncreasing: return "increasing";
    case CaseMechanism::kCriticalOutside: return "critical-outside";
    case CaseMechanism::kCriticalInside: return "critical-inside";
  }
  return "unknown";
}

CaseClassification case_classification(const ClassParams& params) {
  const BetaThresholds th = beta_threshold(params.lambda());
  if (params.beta() <= th.theorem_threshold) {
    const CaseMechanism mechanism = k_quartic_coefficient(params) >= 0.0 ? CaseMechanism::kIncreasing
                                                                          : CaseMechanism::kCriticalOutside;
    return CaseClassification{2.0, CaseTag::kBoundary, mechanism};
  }
  const std::optional<double> c02 = critical_point(params);
  if (!c02) throw NumericalError("interior case predicted but K has no critical point in (0, inf)");
  return CaseClassification{*c02, CaseTag::kInterior, CaseMechanism::kCriticalInside};
}

}  // namespace biuniv

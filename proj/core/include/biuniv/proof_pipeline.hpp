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

// Executable form of the objects used in the second Hankel determinant
// argument for G^lambda_sigma(beta).
//
// For c = c1 in [0, 2] and gamma1 = |x|, gamma2 = |y| in [0, 1],
//
//   |a2 a4 - a3^2| <= F(g1, g2) = T1 + T2 (g1 + g2) + T3 (g1^2 + g2^2) + T4 (g1 + g2)^2,
//
// the square maximum is F(1, 1) = K(c), and the bound is max K over [0, 2].
// Each claim the argument makes about T1..T4, the edges G = F(0, .) and
// H = F(1, .), and the critical point of K is exposed here so that it can be
// swept over a parameter lattice.

#include <optional>
#include <string_view>

#include "biuniv/minda_core.hpp"

namespace biuniv {

struct ProofCoefficients {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double t4 = 0.0;
  double c = 0.0;
  ClassParams params{0.0, 0.0};
};

/// T1(c) .. T4(c). Throws DomainError for c outside [0, 2].
ProofCoefficients t_coefficients(double c, const ClassParams& params);

/// F(g1, g2) from precomputed coefficients; no range checks (hot path of the
/// grid oracle).
inline double evaluate_f(const ProofCoefficients& t, double g1, double g2) noexcept {
  const double s = g1 + g2;
  return t.t1 + t.t2 * s + t.t3 * (g1 * g1 + g2 * g2) + t.t4 * s * s;
}

/// F(g1, g2) with range checks on every argument.
double f_value(double g1, double g2, double c, const ClassParams& params);

/// Edge G(g) = F(0, g) = T1 + T2 g + (T3 + T4) g^2.
double g_edge(const ProofCoefficients& t, double g) noexcept;

/// Edge H(g) = F(1, g) = (T3 + T4) g^2 + (T2 + 2 T4) g + T1 + T2 + T3 + T4.
double h_edge(const ProofCoefficients& t, double g) noexcept;

struct KValues {
  double k = 0.0;
  double k_prime = 0.0;
};

/// K(c) and K'(c). K is evaluated from the expanded quartic and checked
/// against T1 + 2 T2 + 2 T3 + 4 T4; a mismatch above 1e-12 throws NumericalError.
KValues k_values(double c, const ClassParams& params);

/// Expanded quartic K(c) without domain checks (also valid slightly outside
/// [0, 2], which finite-difference probes need).
double k_polynomial(double c, const ClassParams& params) noexcept;

/// Cubic K'(c) without domain checks.
double k_prime_polynomial(double c, const ClassParams& params) noexcept;

/// Coefficient of c^4 inside the braces of K(c). Its sign separates the two
/// cases of the argument (nonnegative => K is increasing on (0, 2)).
double k_quartic_coefficient(const ClassParams& params) noexcept;

/// The nonzero critical point c02 of K, absent if the radicand is negative or
/// not finite.
std::optional<double> critical_point(const ClassParams& params);

enum class CaseTag { kBoundary, kInterior };

std::string_view to_string(CaseTag tag) noexcept;

/// Which sub-argument places the maximum of K.
enum class CaseMechanism {
  kIncreasing,       // quartic coefficient >= 0, K increasing on (0, 2)
  kCriticalOutside,  // quartic coefficient < 0 but c02 >= 2
  kCriticalInside,   // c02 in (0, 2) is the maximizer
};

std::string_view to_string(CaseMechanism mechanism) noexcept;

struct CaseClassification {
  double argmax_prediction = 2.0;
  CaseTag tag = CaseTag::kBoundary;
  CaseMechanism mechanism = CaseMechanism::kIncreasing;
};

/// Predicted argmax of K on [0, 2]: c = 2 when beta <= theorem threshold, else c02.
/// Throws NumericalError if the interior case is predicted but c02 is absent.
CaseClassification case_classification(const ClassParams& params);

}  // namespace biuniv

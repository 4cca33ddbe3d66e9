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

// Shared value types for the bi-univalent class G^lambda_sigma(phi):
// subordination targets, class parameters, Taylor prefixes of f and f^-1,
// Schwarz and Caratheodory coefficient prefixes, and bound reports.

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace biuniv {

using Complex = std::complex<double>;

/// Thrown when an argument lies outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a computation hits a numerical degeneracy or an internal
/// consistency check between two evaluation routes fails.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Real Taylor data B1, B2, B3 of a Ma-Minda function
/// phi(z) = 1 + B1 z + B2 z^2 + B3 z^3 + ...
///
/// Only B1 > 0 is enforced. The geometric requirement (phi maps the disk onto a
/// region starlike w.r.t. 1, symmetric about the real axis) cannot be decided
/// from three coefficients. B3 is carried along but no bound reads it.
class MindaPhi {
 public:
  MindaPhi(double b1, double b2, double b3 = 0.0);

  double b1() const noexcept { return b1_; }
  double b2() const noexcept { return b2_; }
  double b3() const noexcept { return b3_; }

 private:
  double b1_;
  double b2_;
  double b3_;
};

/// The pair (lambda, beta) with 0 <= lambda <= 1 and 0 <= beta < 1.
class ClassParams {
 public:
  ClassParams(double lambda, double beta);

  double lambda() const noexcept { return lambda_; }
  double beta() const noexcept { return beta_; }

 private:
  double lambda_;
  double beta_;
};

/// Coefficients (a2, a3, a4) of f(z) = z + a2 z^2 + a3 z^3 + a4 z^4 + ...
struct TaylorPrefix {
  Complex a2{};
  Complex a3{};
  Complex a4{};

  bool is_finite() const noexcept;
};

/// Coefficients (A2, A3, A4) of f^-1(w) = w + A2 w^2 + A3 w^3 + A4 w^4 + ...
struct InverseCoeffs {
  Complex a2{};
  Complex a3{};
  Complex a4{};
};

/// First two coefficients of a Schwarz function u(z) = b1 z + b2 z^2 + ...
/// Validated: |b1| <= 1 and |b2| <= 1 - |b1|^2.
class SchwarzPrefix {
 public:
  SchwarzPrefix(Complex b1, Complex b2);

  Complex b1() const noexcept { return b1_; }
  Complex b2() const noexcept { return b2_; }

 private:
  Complex b1_;
  Complex b2_;
};

/// (c1, c2, c3) of p(z) = 1 + c1 z + c2 z^2 + c3 z^3 + ... with c1 rotated
/// onto the real segment [0, 2]. Construction only checks that c1 is in range
/// and that all entries are finite; membership in the coefficient body is
/// decided by prefix_is_admissible().
class CaratheodoryPrefix {
 public:
  CaratheodoryPrefix(double c1, Complex c2, Complex c3);

  double c1() const noexcept { return c1_; }
  Complex c2() const noexcept { return c2_; }
  Complex c3() const noexcept { return c3_; }

 private:
  double c1_;
  Complex c2_;
  Complex c3_;
};

/// Free parameters (x, z) of the Grenander-Szego representation, |x|, |z| <= 1.
class GrenanderParams {
 public:
  GrenanderParams(Complex x, Complex z);

  Complex x() const noexcept { return x_; }
  Complex z() const noexcept { return z_; }

 private:
  Complex x_;
  Complex z_;
};

enum class Branch {
  kNone,           // single-formula bound
  kLargeB1,        // B1 >= 4 / (3 (1 + lambda))
  kSmallB1,        // B1 <  4 / (3 (1 + lambda))
  kB2WithinB1,     // |B2| <= B1
  kB2ExceedsB1,    // |B2| >  B1
  kBoundaryCase,   // beta <= beta threshold, maximum of K at c = 2
  kInteriorCase,   // beta >  beta threshold, maximum of K at the critical point
};

std::string_view to_string(Branch branch) noexcept;

/// A bound value together with the piecewise branch that produced it.
struct BoundReport {
  double value = 0.0;
  Branch branch = Branch::kNone;
  std::optional<double> threshold;
};

/// Coefficients of f^-1 from those of f, through order 4.
InverseCoeffs inverse_prefix(const TaylorPrefix& t);

enum class SpecialPhiKind {
  kLinearOrder,  // (1 + (1 - 2 beta) z) / (1 - z),  0 <= beta < 1
  kPower,        // ((1 + z) / (1 - z))^beta,         0 <  beta <= 1
};

MindaPhi special_phi(SpecialPhiKind kind, double param);

}  // namespace biuniv

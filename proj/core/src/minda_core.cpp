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

#include "biuniv/minda_core.hpp"

#include <cmath>
#include <string>

namespace biuniv {
namespace {

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Slack for the closed-disk constraints so that points produced by rounding on
// the boundary (e.g. |b1| = 1 from polar sampling) are not rejected.
constexpr double kDiskSlack = 1e-12;

}  // namespace

MindaPhi::MindaPhi(double b1, double b2, double b3) : b1_(b1), b2_(b2), b3_(b3) {
  if (!std::isfinite(b1) || !std::isfinite(b2) || !std::isfinite(b3)) {
    throw DomainError("MindaPhi: coefficients must be finite");
  }
  if (!(b1 > 0.0)) {
    throw DomainError("MindaPhi: B1 must be positive, got " + std::to_string(b1));
  }
}

ClassParams::ClassParams(double lambda, double beta) : lambda_(lambda), beta_(beta) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("ClassParams: lambda must lie in [0, 1], got " + std::to_string(lambda));
  }
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw DomainError("ClassParams: beta must lie in [0, 1), got " + std::to_string(beta));
  }
}

bool TaylorPrefix::is_finite() const noexcept { return finite(a2) && finite(a3) && finite(a4); }

SchwarzPrefix::SchwarzPrefix(Complex b1, Complex b2) : b1_(b1), b2_(b2) {
  if (!finite(b1) || !finite(b2)) throw DomainError("SchwarzPrefix: coefficients must be finite");
  const double r1 = std::abs(b1);
  if (r1 > 1.0 + kDiskSlack) throw DomainError("SchwarzPrefix: |b1| > 1");
  if (std::abs(b2) > 1.0 - r1 * r1 + kDiskSlack) {
    throw DomainError("SchwarzPrefix: |b2| > 1 - |b1|^2");
  }
}

CaratheodoryPrefix::CaratheodoryPrefix(double c1, Complex c2, Complex c3) : c1_(c1), c2_(c2), c3_(c3) {
  if (!std::isfinite(c1) || !finite(c2) || !finite(c3)) {
    throw DomainError("CaratheodoryPrefix: coefficients must be finite");
  }
  if (!(c1 >= 0.0 && c1 <= 2.0)) {
    throw DomainError("CaratheodoryPrefix: c1 must lie in [0, 2], got " + std::to_string(c1));
  }
}

GrenanderParams::GrenanderParams(Complex x, Complex z) : x_(x), z_(z) {
  if (!finite(x) || !finite(z)) throw DomainError("GrenanderParams: parameters must be finite");
  if (std::abs(x) > 1.0 + kDiskSlack || std::abs(z) > 1.0 + kDiskSlack) {
    throw DomainError("GrenanderParams: |x| and |z| must not exceed 1");
  }
}

std::string_view to_string(Branch branch) noexcept {
  switch (branch) {
    case Branch::kNone: return "n/a";
    case Branch::kLargeB1: return "large-B1";
    case Branch::kSmallB1: return "small-B1";
    case Branch::kB2WithinB1: return "abs-B2-le-B1";
    case Branch::kB2ExceedsB1: return "abs-B2-gt-B1";
    case Branch::kBoundaryCase: return "boundary-case";
    case Branch::kInteriorCase: return "interior-case";
  }
  return "unknown";
}

InverseCoeffs inverse_prefix(const TaylorPrefix& t) {
  const Complex a2 = t.a2;
  const Complex a3 = t.a3;
  const Complex a4 = t.a4;
  return InverseCoeffs{
      -a2,
      2.0 * a2 * a2 - a3,
      -(5.0 * a2 * a2 * a2 - 5.0 * a2 * a3 + a4),
  };
}

MindaPhi special_phi(SpecialPhiKind kind, double param) {
  switch (kind) {
    case SpecialPhiKind::kLinearOrder: {
      if (!(param >= 0.0 && param < 1.0)) {
        throw DomainError("special_phi(linear-order): beta must lie in [0, 1)");
      }
      const double b = 2.0 * (1.0 - param);
      return MindaPhi(b, b, b);
    }
    case SpecialPhiKind::kPower: {
      if (!(param > 0.0 && param <= 1.0)) {
        throw DomainError("special_phi(power): beta must lie in (0, 1]");
      }
      // exp(beta * log((1+z)/(1-z))) with log((1+z)/(1-z)) = 2z + 2z^3/3 + ...
      const double b3 = (2.0 * param + 4.0 * param * param * param) / 3.0;
      return MindaPhi(2.0 * param, 2.0 * param * param, b3);
    }
  }
  throw DomainError("special_phi: unknown kind");
}

}  // namespace biuniv

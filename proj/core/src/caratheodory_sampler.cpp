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

#include "biuniv/caratheodory_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "biuniv/closed_form_bounds.hpp"
#include "biuniv/parallel.hpp"

namespace biuniv {
namespace {

template <class Record>
struct Tagged {
  Record record;
  std::size_t draw;  // 1-based draw index within the chunk
};

template <class Record>
struct Collected {
  std::vector<Record> records;
  std::size_t draws = 0;
};

// Runs `draw` chunk by chunk (chunk k on sub-stream (seed, k)) until `target`
// records are accepted, keeping exactly the first `target` in chunk order.
template <class Record, class DrawFn>
Collected<Record> collect(std::uint64_t seed, std::size_t target, std::size_t max_draws, DrawFn draw) {
  if (target == 0) throw DomainError("sampling target must be positive");
  if (max_draws == 0) max_draws = 1000 * target;
  const std::size_t max_chunks = (max_draws + kChunkDraws - 1) / kChunkDraws;
  const std::size_t workers = worker_count();

  Collected<Record> out;
  out.records.reserve(target);
  std::size_t next_chunk = 0;
  while (out.records.size() < target && next_chunk < max_chunks) {
    const std::size_t wave = std::min(workers, max_chunks - next_chunk);
    std::vector<std::vector<Tagged<Record>>> chunks(wave);
    parallel_for(
        wave,
        [&](std::size_t begin, std::size_t end) {
          for (std::size_t w = begin; w < end; ++w) {
            SeedStream stream(seed, next_chunk + w);
            for (std::size_t i = 0; i < kChunkDraws; ++i) {
              if (auto rec = draw(stream)) chunks[w].push_back({std::move(*rec), i + 1});
            }
          }
        },
        workers);
    for (auto& chunk : chunks) {
      if (out.records.size() >= target) break;
      const std::size_t room = target - out.records.size();
      if (chunk.size() >= room) {
        for (std::size_t i = 0; i < room; ++i) out.records.push_back(std::move(chunk[i].record));
        out.draws += chunk[room - 1].draw;
        break;
      }
      for (auto& t : chunk) out.records.push_back(std::move(t.record));
      out.draws += kChunkDraws;
    }
    next_chunk += wave;
  }
  return out;
}

double abs_max(std::initializer_list<Complex> values) {
  double m = 0.0;
  for (const Complex& v : values) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SeedStream::SeedStream(std::uint64_t seed, std::uint64_t index) : engine_(derive_stream_seed(seed, index)) {}

double SeedStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double SeedStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

Complex SeedStream::disk(double radius) {
  const double r = radius * std::sqrt(uniform());
  const double theta = 2.0 * std::numbers::pi * uniform();
  return std::polar(r, theta);
}

CaratheodoryPrefix grenander_prefix(double c1, const GrenanderParams& g) {
  const double s = 4.0 - c1 * c1;
  const Complex x = g.x();
  const Complex c2 = (c1 * c1 + x * s) / 2.0;
  const Complex c3 =
      (c1 * c1 * c1 + 2.0 * c1 * s * x - c1 * s * x * x + 2.0 * s * (1.0 - std::norm(x)) * g.z()) / 4.0;
  return CaratheodoryPrefix(c1, c2, c3);
}

Admissibility prefix_is_admissible(const CaratheodoryPrefix& prefix, double tol) {
  const double c1 = prefix.c1();
  const Complex c2 = prefix.c2();
  const Complex c3 = prefix.c3();
  const double s = 4.0 - c1 * c1;

  Admissibility a;
  a.c1_slack = std::min(c1, 2.0 - c1);
  if (s <= tol) {
    a.c2_slack = -std::abs(c2 - 2.0);
    a.c3_slack = -std::abs(c3 - 2.0);
  } else {
    const Complex x = (2.0 * c2 - c1 * c1) / s;
    a.c2_slack = s - std::abs(2.0 * c2 - c1 * c1);
    const double residual = std::abs(4.0 * c3 - c1 * c1 * c1 - 2.0 * c1 * s * x + c1 * s * x * x);
    a.c3_slack = 2.0 * s * (1.0 - std::norm(x)) - residual;
  }
  a.admissible = a.c1_slack >= -tol && a.c2_slack >= -tol && a.c3_slack >= -tol;
  return a;
}

std::optional<CaratheodoryPrefix> rotate_to_normal_form(const CoefficientTriple& coeffs) {
  const double r = std::abs(coeffs.first);
  if (!(r <= 2.0 + kAdmissibilityTol)) return std::nullopt;
  if (r == 0.0) return CaratheodoryPrefix(0.0, coeffs.second, coeffs.third);
  const Complex w = std::conj(coeffs.first) / r;
  return CaratheodoryPrefix(std::min(r, 2.0), coeffs.second * w * w, coeffs.third * w * w * w);
}

std::optional<AdmissiblePair> build_pair(const CaratheodoryPrefix& p, const ClassParams& params) {
  const double lambda = params.lambda();
  const double u = 1.0 - params.beta();
  const double c1 = p.c1();

  const Complex a2 = u * c1 / 2.0;
  const Complex a3 = (4.0 * lambda * a2 * a2 + u * p.c2()) / (3.0 * (1.0 + lambda));
  const Complex a4 =
      (u * p.c3() + 18.0 * lambda * a2 * a3 - 8.0 * lambda * a2 * a2 * a2) / (4.0 * (1.0 + 2.0 * lambda));

  const CoefficientTriple q{
      Complex(-c1, 0.0),
      (2.0 * (3.0 + lambda) * a2 * a2 - 3.0 * (1.0 + lambda) * a3) / u,
      (2.0 * (10.0 + 11.0 * lambda) * a2 * a3 - 4.0 * (5.0 + 3.0 * lambda) * a2 * a2 * a2 -
       4.0 * (1.0 + 2.0 * lambda) * a4) /
          u,
  };
  const std::optional<CaratheodoryPrefix> q_normal = rotate_to_normal_form(q);
  if (!q_normal || !prefix_is_admissible(*q_normal).admissible) return std::nullopt;
  return AdmissiblePair{p, q, TaylorPrefix{a2, a3, a4}, params};
}

std::optional<AdmissiblePair> sample_pair(SeedStream& stream, const ClassParams& params) {
  const double c1 = stream.uniform(0.0, 2.0);
  const Complex x = stream.disk();
  const Complex z = stream.disk();
  return build_pair(grenander_prefix(c1, GrenanderParams(x, z)), params);
}

double system_residual(const AdmissiblePair& pair) {
  const double lambda = pair.params.lambda();
  const double u = 1.0 - pair.params.beta();
  const auto& [a2, a3, a4] = pair.taylor;
  const Complex c1 = pair.p_prefix.c1();
  const Complex c2 = pair.p_prefix.c2();
  const Complex c3 = pair.p_prefix.c3();
  const auto& [d1, d2, d3] = pair.q_prefix;
  const Complex a2sq = a2 * a2;
  const Complex a2cu = a2sq * a2;
  return abs_max({
      2.0 * a2 - u * c1,
      3.0 * (1.0 + lambda) * a3 - 4.0 * lambda * a2sq - u * c2,
      4.0 * (1.0 + 2.0 * lambda) * a4 - 18.0 * lambda * a2 * a3 + 8.0 * lambda * a2cu - u * c3,
      -2.0 * a2 - u * d1,
      2.0 * (3.0 + lambda) * a2sq - 3.0 * (1.0 + lambda) * a3 - u * d2,
      2.0 * (10.0 + 11.0 * lambda) * a2 * a3 - 4.0 * (5.0 + 3.0 * lambda) * a2cu - 4.0 * (1.0 + 2.0 * lambda) * a4 -
          u * d3,
  });
}

double combined_formula_residual(const AdmissiblePair& pair) {
  const double lambda = pair.params.lambda();
  const double u = 1.0 - pair.params.beta();
  const double c1 = pair.p_prefix.c1();
  const Complex dc2 = pair.p_prefix.c2() - pair.q_prefix.second;
  const Complex dc3 = pair.p_prefix.c3() - pair.q_prefix.third;
  const Complex a3 = u * u / 4.0 * c1 * c1 + u / (6.0 * (1.0 + lambda)) * dc2;
  const Complex a4 = 5.0 * lambda * u * u * u / (16.0 * (1.0 + 2.0 * lambda)) * c1 * c1 * c1 +
                     5.0 * u * u / (24.0 * (1.0 + lambda)) * c1 * dc2 + u / (8.0 * (1.0 + 2.0 * lambda)) * dc3;
  return abs_max({a3 - pair.taylor.a3, a4 - pair.taylor.a4});
}

std::optional<SchwarzReconstruction> schwarz_pair(const SchwarzPrefix& b, const MindaPhi& phi, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("lambda must lie in [0, 1]");
  const double b1c = phi.b1();
  const Complex a2 = b1c * b.b1() / 2.0;
  const Complex a3 = (4.0 * lambda * a2 * a2 + b1c * b.b2() + phi.b2() * b.b1() * b.b1()) / (3.0 * (1.0 + lambda));
  const Complex s2 = (2.0 * (3.0 - lambda) * b1c * b1c - 8.0 * phi.b2()) * a2 * a2 / (b1c * b1c * b1c) - b.b2();
  if (std::abs(s2) > 1.0 - std::norm(b.b1()) + kAdmissibilityTol) return std::nullopt;
  return SchwarzReconstruction{a2, a3, s2};
}

Complex schwarz_a3_from_difference(const SchwarzReconstruction& r, const SchwarzPrefix& b, const MindaPhi& phi,
                                   double lambda) {
  return r.a2 * r.a2 + phi.b1() * (b.b2() - r.s2) / (6.0 * (1.0 + lambda));
}

SchwarzPrefix sample_schwarz_prefix(SeedStream& stream) {
  const Complex b1 = stream.disk();
  const Complex b2 = stream.disk(1.0 - std::norm(b1));
  return SchwarzPrefix(b1, b2);
}

double hankel2_functional(const TaylorPrefix& t) { return std::abs(t.a2 * t.a4 - t.a3 * t.a3); }

double fekete_functional(const TaylorPrefix& t, double delta) { return std::abs(t.a3 - delta * t.a2 * t.a2); }

HankelSampleStats sample_hankel(const ClassParams& params, std::size_t target, std::uint64_t seed,
                                std::size_t max_draws) {
  auto collected = collect<AdmissiblePair>(seed, target, max_draws,
                                           [&](SeedStream& s) { return sample_pair(s, params); });
  HankelSampleStats stats;
  stats.accepted = collected.records.size();
  stats.draws = collected.draws;
  for (const AdmissiblePair& pair : collected.records) {
    const double h = hankel2_functional(pair.taylor);
    if (!stats.argmax || h > stats.max_functional) {
      stats.max_functional = h;
      stats.argmax = pair;
    }
    stats.max_system_residual = std::max(stats.max_system_residual, system_residual(pair));
    stats.max_combined_residual = std::max(stats.max_combined_residual, combined_formula_residual(pair));
  }
  return stats;
}

SchwarzSampleStats sample_schwarz(const MindaPhi& phi, double lambda, std::size_t target, std::uint64_t seed,
                                  std::size_t max_draws) {
  struct Draw {
    SchwarzPrefix b;
    SchwarzReconstruction r;
  };
  auto collected = collect<Draw>(seed, target, max_draws, [&](SeedStream& s) -> std::optional<Draw> {
    const SchwarzPrefix b = sample_schwarz_prefix(s);
    if (auto r = schwarz_pair(b, phi, lambda)) return Draw{b, *r};
    return std::nullopt;
  });

  SchwarzSampleStats stats;
  stats.accepted = collected.records.size();
  stats.draws = collected.draws;
  stats.delta = fekete_delta(lambda);
  for (const Draw& d : collected.records) {
    const TaylorPrefix t{d.r.a2, d.r.a3, Complex{}};
    const double abs_a2 = std::abs(t.a2);
    const double abs_a3 = std::abs(t.a3);
    const double fek = fekete_functional(t, stats.delta);
    if (!stats.argmax_a2 || abs_a2 > stats.max_abs_a2) {
      stats.max_abs_a2 = abs_a2;
      stats.argmax_a2 = d.b;
    }
    if (!stats.argmax_a3 || abs_a3 > stats.max_abs_a3) {
      stats.max_abs_a3 = abs_a3;
      stats.argmax_a3 = d.b;
    }
    if (!stats.argmax_fekete || fek > stats.max_fekete) {
      stats.max_fekete = fek;
      stats.argmax_fekete = d.b;
    }
    const Complex a3_alt = schwarz_a3_from_difference(d.r, d.b, phi, lambda);
    stats.max_a3_route_gap = std::max(stats.max_a3_route_gap, std::abs(a3_alt - d.r.a3));
  }
  return stats;
}

}  // namespace biuniv

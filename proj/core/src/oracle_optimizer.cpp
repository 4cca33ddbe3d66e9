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

#include "biuniv/oracle_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "biuniv/parallel.hpp"

namespace biuniv {
namespace {

void check_resolution(double resolution, double limit, const char* what) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw DomainError(std::string(what) + ": resolution must be positive");
  }
  if (resolution > limit) {
    throw DomainError(std::string(what) + ": resolution exceeds maximum of " + std::to_string(limit));
  }
}

// Index of the lexicographically first entry within kTieTolerance of the max.
// Entries are assumed to be stored in lexicographic coordinate order.
std::size_t tie_break(const std::vector<double>& values, double& best) {
  best = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= best - kTieTolerance) return i;
  }
  return 0;
}

struct Pick2 {
  double value;
  double x;
  double y;
};

Pick2 search_square(const ProofCoefficients& t, const std::vector<double>& xs, const std::vector<double>& ys) {
  thread_local std::vector<double> values;
  values.resize(xs.size() * ys.size());
  std::size_t k = 0;
  for (double x : xs) {
    for (double y : ys) values[k++] = evaluate_f(t, x, y);
  }
  double best = 0.0;
  const std::size_t idx = tie_break(values, best);
  return Pick2{best, xs[idx / ys.size()], ys[idx % ys.size()]};
}

}  // namespace

std::vector<double> grid_points(double lo, double hi, double step) {
  std::vector<double> pts;
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  pts.reserve(n + 2);
  for (std::size_t i = 0; i <= n; ++i) pts.push_back(lo + static_cast<double>(i) * step);
  if (hi - pts.back() > 1e-9 * step) {
    pts.push_back(hi);
  } else {
    pts.back() = hi;
  }
  return pts;
}

std::vector<double> refinement_points(double center, double lo, double hi, double step) {
  const double fine = step / kRefinementFactor;
  std::vector<double> pts;
  pts.reserve(2 * kRefinementFactor + 1);
  for (int k = -kRefinementFactor; k <= kRefinementFactor; ++k) {
    const double x = k == 0 ? center : center + k * fine;
    if (x < lo - 1e-15 || x > hi + 1e-15) continue;
    const double clipped = std::clamp(x, lo, hi);
    if (!pts.empty() && clipped <= pts.back()) continue;
    pts.push_back(clipped);
  }
  return pts;
}

OptResult maximize_f_on_square(const ProofCoefficients& t, double resolution) {
  check_resolution(resolution, kMaxSquareResolution, "maximize_f_on_square");
  const std::vector<double> grid = grid_points(0.0, 1.0, resolution);
  const Pick2 coarse = search_square(t, grid, grid);

  const std::vector<double> xs = refinement_points(coarse.x, 0.0, 1.0, resolution);
  const std::vector<double> ys = refinement_points(coarse.y, 0.0, 1.0, resolution);
  const Pick2 fine = search_square(t, xs, ys);

  OptResult r;
  r.coarse_max = coarse.value;
  r.max_value = std::max(coarse.value, fine.value);
  r.argmax = {fine.x, fine.y};
  r.resolution = {resolution, resolution / kRefinementFactor};
  r.refined = true;
  return r;
}

OptResult maximize_f_on_square(double c, const ClassParams& params, double resolution) {
  return maximize_f_on_square(t_coefficients(c, params), resolution);
}

OptResult maximize_k_on_interval(const ClassParams& params, double resolution) {
  check_resolution(resolution, kMaxIntervalResolution, "maximize_k_on_interval");
  auto search = [&](const std::vector<double>& cs, double& value) {
    std::vector<double> values(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) values[i] = k_values(cs[i], params).k;
    return cs[tie_break(values, value)];
  };
  double coarse_value = 0.0;
  const double coarse_c = search(grid_points(0.0, 2.0, resolution), coarse_value);
  double fine_value = 0.0;
  const double fine_c = search(refinement_points(coarse_c, 0.0, 2.0, resolution), fine_value);

  OptResult r;
  r.coarse_max = coarse_value;
  r.max_value = std::max(coarse_value, fine_value);
  r.argmax = {fine_c};
  r.resolution = {resolution, resolution / kRefinementFactor};
  r.refined = true;
  return r;
}

OptResult hankel_bound_oracle(const ClassParams& params, double resolution) {
  check_resolution(resolution, kMaxIntervalResolution, "hankel_bound_oracle");

  auto search = [&](const std::vector<double>& cs, double& value) {
    std::vector<OptResult> inner(cs.size());
    parallel_for(cs.size(), [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) inner[i] = maximize_f_on_square(cs[i], params, resolution);
    });
    std::vector<double> values(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) values[i] = inner[i].max_value;
    const std::size_t idx = tie_break(values, value);
    return std::vector<double>{cs[idx], inner[idx].argmax[0], inner[idx].argmax[1]};
  };

  double coarse_value = 0.0;
  const std::vector<double> coarse = search(grid_points(0.0, 2.0, resolution), coarse_value);
  double fine_value = 0.0;
  const std::vector<double> fine = search(refinement_points(coarse[0], 0.0, 2.0, resolution), fine_value);

  OptResult r;
  r.coarse_max = coarse_value;
  r.max_value = std::max(coarse_value, fine_value);
  r.argmax = fine;
  r.resolution = {resolution, resolution / kRefinementFactor};
  r.refined = true;
  return r;
}

}  // namespace biuniv

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

#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

#include "biuniv/caratheodory_sampler.hpp"
#include "biuniv/closed_form_bounds.hpp"
#include "biuniv/oracle_optimizer.hpp"
#include "biuniv/proof_pipeline.hpp"

namespace biuniv::report {
namespace {

using Json = nlohmann::ordered_json;

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

double parse_number(std::string_view text, std::string_view what) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ConfigError("invalid number '" + s + "' in " + std::string(what));
  }
  return v;
}

std::vector<double> default_sign_lambdas() { return parse_grid("0:1:0.1"); }
std::vector<double> default_sign_betas() { return parse_grid("0:0.95:0.05"); }
std::vector<double> default_lattice_lambdas() { return parse_grid("0:1:0.25"); }
std::vector<double> default_lattice_betas() { return parse_grid("0:0.8:0.2"); }

void check_lambda_values(const std::vector<double>& grid) {
  for (double l : grid) {
    if (!(l >= 0.0 && l <= 1.0)) throw ConfigError("lambda grid value " + format_number(l) + " outside [0, 1]");
  }
}

void check_beta_values(const std::vector<double>& grid) {
  for (double b : grid) {
    if (!(b >= 0.0 && b < 1.0)) throw ConfigError("beta grid value " + format_number(b) + " outside [0, 1)");
  }
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t resolved_samples(const RunConfig& config, std::size_t fallback) {
  const std::size_t n = config.samples.value_or(fallback);
  if (n == 0) throw ConfigError("samples must be positive");
  return n;
}

void check_resolution(double resolution) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) throw ConfigError("resolution must be positive");
  if (resolution > kMaxIntervalResolution) {
    throw ConfigError("resolution exceeds maximum of " + format_number(kMaxIntervalResolution));
  }
}

ClassParams make_params(double lambda, double beta) {
  try {
    return ClassParams(lambda, beta);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Running minimum of a slack quantity over a lattice, with the witness
// attaining it.
class SlackTracker {
 public:
  explicit SlackTracker(std::string check, bool strict = false) : check_(std::move(check)), strict_(strict) {}

  template <class WitnessFn>
  void observe(double slack, WitnessFn&& witness) {
    ++points_;
    if (points_ == 1 || slack < worst_ || std::isnan(slack)) {
      worst_ = slack;
      witness_ = witness();
    }
  }

  CheckRow finish() const {
    CheckRow row;
    row.check = check_;
    row.points = points_;
    row.worst_slack = points_ == 0 ? 0.0 : worst_;
    row.passed = points_ > 0 && !std::isnan(worst_) && (strict_ ? worst_ > 0.0 : worst_ >= 0.0);
    row.witness = witness_;
    return row;
  }

 private:
  std::string check_;
  bool strict_;
  std::size_t points_ = 0;
  double worst_ = 0.0;
  Json witness_ = Json::object();
};

Json point(double c, double lambda, double beta) {
  return Json{{"c", round12(c)}, {"lambda", round12(lambda)}, {"beta", round12(beta)}};
}

Json point(double lambda, double beta) { return Json{{"lambda", round12(lambda)}, {"beta", round12(beta)}}; }

Json complex_json(Complex v) { return Json::array({round12(v.real()), round12(v.imag())}); }

struct Lattices {
  std::vector<double> sign_lambdas;
  std::vector<double> sign_betas;
  std::vector<double> lambdas;
  std::vector<double> betas;
};

Lattices verify_lattices(const RunConfig& config) {
  Lattices l;
  l.sign_lambdas = config.lambda_grid.empty() ? default_sign_lambdas() : config.lambda_grid;
  l.sign_betas = config.beta_grid.empty() ? default_sign_betas() : config.beta_grid;
  l.lambdas = config.lambda_grid.empty() ? default_lattice_lambdas() : config.lambda_grid;
  l.betas = config.beta_grid.empty() ? default_lattice_betas() : config.beta_grid;
  return l;
}

void proof_checks(const Lattices& lat, std::vector<CheckRow>& rows) {
  SlackTracker t1("proof.T1_nonnegative");
  SlackTracker t2("proof.T2_nonnegative");
  SlackTracker t3("proof.T3_nonpositive");
  SlackTracker t4("proof.T4_nonnegative");
  SlackTracker t3_2t4("proof.T3_plus_2T4_positive", true);
  SlackTracker edge_order("proof.G1_le_H1");
  SlackTracker g_slope("proof.T2_plus_2T3_plus_2T4_nonnegative");
  SlackTracker k_consistency("proof.K_expanded_matches_assembled");
  SlackTracker k_derivative("proof.K_prime_matches_finite_difference");
  SlackTracker concavity("proof.K_concave_at_critical_point", true);

  const std::vector<double> cs = grid_points(0.0, 2.0, 0.01);
  for (double lambda : lat.sign_lambdas) {
    for (double beta : lat.sign_betas) {
      const ClassParams params(lambda, beta);
      for (double c : cs) {
        const ProofCoefficients t = t_coefficients(c, params);
        auto w = [&] { return point(c, lambda, beta); };
        t1.observe(t.t1, w);
        t2.observe(t.t2, w);
        t3.observe(-t.t3, w);
        t4.observe(t.t4, w);
        edge_order.observe(h_edge(t, 1.0) - g_edge(t, 1.0), w);
        const double assembled = t.t1 + 2.0 * t.t2 + 2.0 * t.t3 + 4.0 * t.t4;
        k_consistency.observe(1e-12 - std::abs(k_polynomial(c, params) - assembled), w);
        if (c > 0.0 && c < 2.0) {
          t3_2t4.observe(t.t3 + 2.0 * t.t4, w);
          g_slope.observe(t.t2 + 2.0 * (t.t3 + t.t4), w);
          const double h = 1e-5;
          const double fd = (k_polynomial(c + h, params) - k_polynomial(c - h, params)) / (2.0 * h);
          k_derivative.observe(1e-6 - std::abs(k_prime_polynomial(c, params) - fd), w);
        }
      }
      const CaseClassification cls = case_classification(params);
      if (cls.tag == CaseTag::kInterior) {
        const double c0 = cls.argmax_prediction;
        const double h = 1e-4;
        const double second =
            (k_polynomial(c0 + h, params) - 2.0 * k_polynomial(c0, params) + k_polynomial(c0 - h, params)) / (h * h);
        concavity.observe(-second, [&] { return point(c0, lambda, beta); });
      }
    }
  }
  for (const SlackTracker* t : {&t1, &t2, &t3, &t4, &t3_2t4, &edge_order, &g_slope, &k_consistency, &k_derivative}) {
    rows.push_back(t->finish());
  }
  // No interior-case point on the lattice means there is nothing to violate.
  CheckRow cc = concavity.finish();
  if (cc.points == 0) cc.passed = true;
  rows.push_back(cc);
}

void closed_form_checks(std::vector<CheckRow>& rows) {
  SlackTracker continuity("closed_form.branch_continuity");
  SlackTracker corollary("closed_form.corollary_consistency");
  SlackTracker denominator("closed_form.interior_denominator_nonzero", true);

  for (double lambda : grid_points(0.0, 1.0, 0.01)) {
    const double th = beta_threshold(lambda).theorem_threshold;
    const ClassParams at(lambda, th);
    const double gap = std::abs(hankel2_boundary_value(at) - hankel2_interior_value(at));
    continuity.observe(1e-8 - gap, [&] { return point(lambda, th); });
    for (double beta : grid_points(0.0, 0.999, 0.001)) {
      if (beta <= th) continue;
      const double den = hankel2_interior_denominator(ClassParams(lambda, beta));
      denominator.observe(std::abs(den) - 1e-6, [&] { return point(lambda, beta); });
    }
  }
  for (double beta : grid_points(0.0, 0.99, 0.01)) {
    for (auto [lambda, which] : {std::pair{0.0, Corollary::kHBeta}, std::pair{1.0, Corollary::kKBeta}}) {
      const ClassParams params(lambda, beta);
      const double gap = std::abs(hankel2_bound(params).value - corollary_bounds(params, which).value);
      corollary.observe(1e-10 - gap, [&] { return point(lambda, beta); });
    }
  }
  rows.push_back(continuity.finish());
  rows.push_back(corollary.finish());
  rows.push_back(denominator.finish());
}

void oracle_checks(const Lattices& lat, double resolution, std::vector<CheckRow>& rows) {
  SlackTracker corner("oracle.square_max_at_corner");
  SlackTracker agreement("oracle.hankel_bound_agreement");
  SlackTracker location("oracle.k_argmax_location");
  SlackTracker soundness("oracle.refinement_soundness");

  const std::vector<double> cs = grid_points(0.0, 2.0, 0.01);
  for (double lambda : lat.lambdas) {
    for (double beta : lat.betas) {
      const ClassParams params(lambda, beta);
      for (double c : cs) {
        if (c <= 0.0 || c >= 2.0) continue;
        const ProofCoefficients t = t_coefficients(c, params);
        const OptResult sq = maximize_f_on_square(t, std::min(resolution, kMaxSquareResolution));
        const double dist = std::hypot(sq.argmax[0] - 1.0, sq.argmax[1] - 1.0);
        const double value_slack = evaluate_f(t, 1.0, 1.0) + kTieTolerance - sq.max_value;
        const double location_slack = sq.resolution[1] * (1.0 + 1e-9) - dist;
        corner.observe(std::min(value_slack, location_slack), [&] {
          Json w = point(c, lambda, beta);
          w["argmax"] = Json::array({round12(sq.argmax[0]), round12(sq.argmax[1])});
          return w;
        });
        soundness.observe(sq.max_value - sq.coarse_max, [&] { return point(c, lambda, beta); });
      }

      const OptResult oracle = hankel_bound_oracle(params, resolution);
      const double closed = hankel2_bound(params).value;
      agreement.observe(5.0 * resolution * resolution + 1e-8 - std::abs(oracle.max_value - closed), [&] {
        Json w = point(lambda, beta);
        w["oracle"] = round12(oracle.max_value);
        w["closed_form"] = round12(closed);
        return w;
      });
      soundness.observe(oracle.max_value - oracle.coarse_max, [&] { return point(lambda, beta); });

      const OptResult kmax = maximize_k_on_interval(params, resolution);
      const CaseClassification cls = case_classification(params);
      location.observe(2.0 * resolution - std::abs(kmax.argmax[0] - cls.argmax_prediction), [&] {
        Json w = point(lambda, beta);
        w["oracle_argmax"] = round12(kmax.argmax[0]);
        w["predicted"] = round12(cls.argmax_prediction);
        w["case"] = std::string(to_string(cls.tag));
        return w;
      });
      soundness.observe(kmax.max_value - kmax.coarse_max, [&] { return point(lambda, beta); });
    }
  }
  rows.push_back(corner.finish());
  rows.push_back(agreement.finish());
  rows.push_back(location.finish());
  rows.push_back(soundness.finish());
}

std::vector<std::pair<std::string, MindaPhi>> verify_phis(const RunConfig& config) {
  if (config.phi.b1 || config.phi.kind) {
    return {{"configured", resolve_phi(config.phi, config.beta.value_or(0.0))}};
  }
  return {
      {"linear(0)", special_phi(SpecialPhiKind::kLinearOrder, 0.0)},
      {"linear(0.5)", special_phi(SpecialPhiKind::kLinearOrder, 0.5)},
      {"power(0.5)", special_phi(SpecialPhiKind::kPower, 0.5)},
      {"power(1)", special_phi(SpecialPhiKind::kPower, 1.0)},
      {"B1=1,B2=3", MindaPhi(1.0, 3.0)},
      {"B1=0.5,B2=0.1", MindaPhi(0.5, 0.1)},
      {"B1=2,B2=-1", MindaPhi(2.0, -1.0)},
  };
}

void sampler_checks(const RunConfig& config, const Lattices& lat, std::size_t samples,
                    std::vector<CheckRow>& rows) {
  SlackTracker count("sampler.hankel_accepted_count");
  SlackTracker hankel("sampler.hankel_one_sided");
  SlackTracker system("sampler.coefficient_system_consistency");
  for (double lambda : lat.lambdas) {
    for (double beta : lat.betas) {
      const ClassParams params(lambda, beta);
      const HankelSampleStats s = sample_hankel(params, samples, config.seed);
      const double bound = hankel2_bound(params).value;
      count.observe(static_cast<double>(s.accepted) - static_cast<double>(samples), [&] {
        Json w = point(lambda, beta);
        w["accepted"] = s.accepted;
        w["draws"] = s.draws;
        return w;
      });
      hankel.observe(bound + 1e-9 - s.max_functional, [&] {
        Json w = point(lambda, beta);
        w["empirical_max"] = round12(s.max_functional);
        w["bound"] = round12(bound);
        if (s.argmax) {
          w["c"] = Json::array({round12(s.argmax->p_prefix.c1()), complex_json(s.argmax->p_prefix.c2()),
                                complex_json(s.argmax->p_prefix.c3())});
        }
        return w;
      });
      system.observe(1e-10 - std::max(s.max_system_residual, s.max_combined_residual),
                     [&] { return point(lambda, beta); });
    }
  }
  rows.push_back(count.finish());
  rows.push_back(hankel.finish());
  rows.push_back(system.finish());

  SlackTracker s_count("sampler.schwarz_accepted_count");
  SlackTracker a2_t1("sampler.schwarz_a2_initial_bound");
  SlackTracker a3_t1("sampler.schwarz_a3_initial_bound");
  SlackTracker a2_t2("sampler.schwarz_a2_fekete_bound");
  SlackTracker fek("sampler.schwarz_fekete_functional_bound");
  SlackTracker routes("sampler.schwarz_a3_routes_agree");
  for (const auto& [label, phi] : verify_phis(config)) {
    for (double lambda : lat.lambdas) {
      const SchwarzSampleStats s = sample_schwarz(phi, lambda, samples, config.seed);
      auto w = [&, &label = label, &phi = phi] {
        return Json{{"phi", label}, {"b1", round12(phi.b1())}, {"b2", round12(phi.b2())}, {"lambda", round12(lambda)}};
      };
      s_count.observe(static_cast<double>(s.accepted) - static_cast<double>(samples), w);
      a2_t1.observe(a2_bound(phi, lambda).value + 1e-9 - s.max_abs_a2, w);
      a3_t1.observe(a3_bound(phi, lambda).value + 1e-9 - s.max_abs_a3, w);
      a2_t2.observe(fekete_a2_bound(phi, lambda).value + 1e-9 - s.max_abs_a2, w);
      fek.observe(fekete_functional_bound(phi, lambda).report.value + 1e-9 - s.max_fekete, w);
      routes.observe(1e-10 - s.max_a3_route_gap, w);
    }
  }
  for (const SlackTracker* t : {&s_count, &a2_t1, &a3_t1, &a2_t2, &fek, &routes}) rows.push_back(t->finish());

  SlackTracker lemma("lemma.grenander_roundtrip");
  SlackTracker classical("lemma.classical_coefficient_bounds");
  SeedStream stream(config.seed, 0xC0FFEEULL);
  for (std::size_t i = 0; i < samples; ++i) {
    const double c1 = stream.uniform(0.0, 2.0);
    const GrenanderParams g(stream.disk(), stream.disk());
    const CaratheodoryPrefix p = grenander_prefix(c1, g);
    const Admissibility a = prefix_is_admissible(p);
    auto w = [&] {
      return Json{{"c1", round12(c1)}, {"x", complex_json(g.x())}, {"z", complex_json(g.z())}};
    };
    lemma.observe(a.admissible ? std::min({a.c1_slack, a.c2_slack, a.c3_slack}) + kAdmissibilityTol : -1.0, w);
    const double half = c1 * c1 / 2.0;
    classical.observe(std::min({2.0 - c1, 2.0 + 1e-12 - std::abs(p.c2()), 2.0 + 1e-12 - std::abs(p.c3()),
                                2.0 - half + 1e-12 - std::abs(p.c2() - half)}),
                      w);
  }
  rows.push_back(lemma.finish());
  rows.push_back(classical.finish());
}

Json row_json(const CheckRow& r) {
  return Json{{"check", r.check},
              {"passed", r.passed},
              {"points", r.points},
              {"worst_slack", round12(r.worst_slack)},
              {"witness", r.witness}};
}

void write_output(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open output path '" + config.output + "'");
  file << text;
  file.flush();
  if (!file) throw ConfigError("failed writing output path '" + config.output + "'");
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<double> parse_grid(std::string_view spec) {
  const std::string s(spec);
  const auto first = s.find(':');
  if (first == std::string::npos) return {parse_number(s, "grid")};
  const auto second = s.find(':', first + 1);
  if (second == std::string::npos || s.find(':', second + 1) != std::string::npos) {
    throw ConfigError("grid must have the form a:b:step, got '" + s + "'");
  }
  const double a = parse_number(s.substr(0, first), "grid start");
  const double b = parse_number(s.substr(first + 1, second - first - 1), "grid end");
  const double step = parse_number(s.substr(second + 1), "grid step");
  if (!(step > 0.0)) throw ConfigError("grid step must be positive");
  if (b < a) throw ConfigError("grid end is below grid start");
  const double count = std::floor((b - a) / step + 1e-9);
  if (count > 1e6) throw ConfigError("grid has too many points");
  std::vector<double> out;
  for (long i = 0; i <= static_cast<long>(count); ++i) out.push_back(a + static_cast<double>(i) * step);
  if (std::abs(out.back() - b) <= 1e-9 * step) out.back() = b;
  return out;
}

MindaPhi resolve_phi(const PhiSpec& spec, double beta) {
  try {
    if (spec.b1 || spec.b2) {
      if (spec.kind || spec.param) throw ConfigError("--phi-b1/--phi-b2 cannot be combined with --phi-kind");
      if (!spec.b1 || !spec.b2) throw ConfigError("--phi-b1 and --phi-b2 must be given together");
      return MindaPhi(*spec.b1, *spec.b2);
    }
    if (spec.kind) {
      const double param = spec.param.value_or(*spec.kind == SpecialPhiKind::kLinearOrder ? beta : 1.0);
      return special_phi(*spec.kind, param);
    }
    if (spec.param) throw ConfigError("--phi-param requires --phi-kind");
    return special_phi(SpecialPhiKind::kLinearOrder, beta);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

std::string cmd_bounds(const RunConfig& config) {
  if (!config.lambda_grid.empty() || !config.beta_grid.empty()) {
    throw ConfigError("bounds takes a single --lambda/--beta point, not grids");
  }
  const double lambda = config.lambda.value_or(0.0);
  const double beta = config.beta.value_or(0.0);
  const ClassParams params = make_params(lambda, beta);
  const MindaPhi phi = resolve_phi(config.phi, beta);

  const BoundReport a2 = a2_bound(phi, lambda);
  const BoundReport a3 = a3_bound(phi, lambda);
  const BoundReport fa2 = fekete_a2_bound(phi, lambda);
  const FeketeFunctionalBound ff = fekete_functional_bound(phi, lambda);
  const BoundReport h2 = hankel2_bound(params);
  const BetaThresholds th = beta_threshold(lambda);
  const CaseClassification cls = case_classification(params);

  Json j;
  j["lambda"] = round12(lambda);
  j["beta"] = round12(beta);
  j["phi_b1"] = round12(phi.b1());
  j["phi_b2"] = round12(phi.b2());
  j["phi_b3"] = round12(phi.b3());
  j["a2_bound"] = round12(a2.value);
  j["a3_bound"] = round12(a3.value);
  j["a3_branch"] = std::string(to_string(a3.branch));
  j["a3_threshold"] = round12(*a3.threshold);
  j["fekete_a2_bound"] = round12(fa2.value);
  j["fekete_a2_branch"] = std::string(to_string(fa2.branch));
  j["fekete_functional_bound"] = round12(ff.report.value);
  j["fekete_functional_branch"] = std::string(to_string(ff.report.branch));
  j["delta"] = round12(ff.delta);
  j["hankel2_bound"] = round12(h2.value);
  j["hankel2_branch"] = std::string(to_string(h2.branch));
  j["hankel2_threshold"] = round12(th.theorem_threshold);
  j["proof_threshold"] = round12(th.proof_threshold);
  j["proof_threshold_clamped"] = th.proof_clamped;
  j["k_argmax"] = round12(cls.argmax_prediction);
  j["k_mechanism"] = std::string(to_string(cls.mechanism));

  if (config.format.value_or(Format::kJson) == Format::kJson) return j.dump(2) + "\n";

  std::string header;
  std::string values;
  for (const auto& [key, value] : j.items()) {
    header += (header.empty() ? "" : ",") + key;
    std::string cell;
    if (value.is_number()) {
      cell = format_number(value.get<double>());
    } else if (value.is_boolean()) {
      cell = value.get<bool>() ? "true" : "false";
    } else {
      cell = value.get<std::string>();
    }
    values += (values.empty() ? "" : ",") + cell;
  }
  return header + "\n" + values + "\n";
}

bool VerifyReport::all_passed() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.passed; });
}

const CheckRow* VerifyReport::first_failure() const noexcept {
  for (const CheckRow& r : rows) {
    if (!r.passed) return &r;
  }
  return nullptr;
}

VerifyReport cmd_verify(const RunConfig& config) {
  check_resolution(config.resolution);
  const std::size_t samples = resolved_samples(config, kDefaultVerifySamples);
  const Lattices lat = verify_lattices(config);
  check_lambda_values(lat.lambdas);
  check_beta_values(lat.betas);

  VerifyReport report;
  proof_checks(lat, report.rows);
  closed_form_checks(report.rows);
  oracle_checks(lat, config.resolution, report.rows);
  sampler_checks(config, lat, samples, report.rows);
  return report;
}

std::string render(const VerifyReport& report, Format format) {
  if (format == Format::kJson) {
    Json j;
    j["passed"] = report.all_passed();
    Json rows = Json::array();
    for (const CheckRow& r : report.rows) rows.push_back(row_json(r));
    j["checks"] = rows;
    if (const CheckRow* f = report.first_failure()) j["first_failure"] = row_json(*f);
    return j.dump(2) + "\n";
  }
  std::string out = "check,passed,points,worst_slack,witness\n";
  for (const CheckRow& r : report.rows) {
    out += r.check + "," + (r.passed ? "true" : "false") + "," + std::to_string(r.points) + "," +
           format_number(r.worst_slack) + "," + csv_quote(r.witness.dump()) + "\n";
  }
  return out;
}

std::string cmd_sweep(const RunConfig& config) {
  const std::size_t samples = resolved_samples(config, kDefaultSweepSamples);
  const std::vector<double> lambdas =
      sorted_unique(config.lambda_grid.empty() ? default_lattice_lambdas() : config.lambda_grid);
  const std::vector<double> betas =
      sorted_unique(config.beta_grid.empty() ? default_lattice_betas() : config.beta_grid);
  check_lambda_values(lambdas);
  check_beta_values(betas);

  const bool csv = config.format.value_or(Format::kCsv) == Format::kCsv;
  std::string out = csv ? "lambda,beta,hankel2_bound,branch,threshold,empirical_max,samples\n" : "";
  Json rows = Json::array();
  for (double lambda : lambdas) {
    for (double beta : betas) {
      const ClassParams params(lambda, beta);
      const BoundReport b = hankel2_bound(params);
      const HankelSampleStats s = sample_hankel(params, samples, config.seed);
      if (csv) {
        out += format_number(lambda) + "," + format_number(beta) + "," + format_number(b.value) + "," +
               std::string(to_string(b.branch)) + "," + format_number(*b.threshold) + "," +
               format_number(s.max_functional) + "," + std::to_string(s.accepted) + "\n";
      } else {
        rows.push_back(Json{{"lambda", round12(lambda)},
                            {"beta", round12(beta)},
                            {"hankel2_bound", round12(b.value)},
                            {"branch", std::string(to_string(b.branch))},
                            {"threshold", round12(*b.threshold)},
                            {"empirical_max", round12(s.max_functional)},
                            {"samples", s.accepted}});
      }
    }
  }
  return csv ? out : rows.dump(2) + "\n";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kBounds:
        write_output(config, cmd_bounds(config), out);
        return 0;
      case Command::kSweep:
        write_output(config, cmd_sweep(config), out);
        return 0;
      case Command::kVerify: {
        const VerifyReport report = cmd_verify(config);
        write_output(config, render(report, config.format.value_or(Format::kJson)), out);
        if (const CheckRow* f = report.first_failure()) {
          err << "verification failed: " << f->check << " worst_slack=" << format_number(f->worst_slack)
              << " witness=" << f->witness.dump() << "\n";
          return 1;
        }
        return 0;
      }
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace biuniv::report

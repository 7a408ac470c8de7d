// Copyright 2026 The e1dirac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate for the toolkit. Nine independent criteria, one verdict
// line each, nonzero exit when any fails. Every check is seeded; two runs
// of this binary print identical output.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "e1dirac/error.hpp"
#include "e1dirac/families.hpp"
#include "e1dirac/foliation.hpp"
#include "e1dirac/poissonization.hpp"
#include "e1dirac/sampling.hpp"
#include "e1dirac/sections.hpp"
#include "runner.hpp"
#include "scenario.hpp"

using namespace e1dirac;
using tools::build_family;
using tools::catalog;
using tools::catalog_scenario;
using tools::Scenario;

namespace {

const Chart kR2({"x", "y"});
const Chart kR3({"x", "y", "z"});

ScalarExpr var(int i) { return ScalarExpr::variable(i); }
ScalarExpr num(long long n, long long d = 1) { return ScalarExpr::rational(n, d); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1e", x);
  return buf;
}

// Small fixed point set per chart: a 2-per-axis lattice plus seeded draws.
std::vector<std::vector<double>> law_points(const Chart& chart) {
  SampleConfig config;
  config.grid = 2;
  config.extra = 6;
  config.seed = 17;
  config.lo = -0.7;
  config.hi = 0.7;
  return sample_points(chart, config);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_over_points(const E1Section& section,
                       const std::vector<std::vector<double>>& points) {
  double m = 0.0;
  for (const auto& p : points) m = std::max(m, max_abs(section.eval(p)));
  return m;
}

E1Section random_section(Rng& rng, const Chart& chart) {
  const int n = chart.dim();
  std::vector<ScalarExpr> xc, ac;
  for (int i = 0; i < n; ++i) {
    xc.push_back(random_polynomial(rng, n, 2));
    ac.push_back(random_polynomial(rng, n, 2));
  }
  return E1Section(VectorField(chart, std::move(xc)), random_polynomial(rng, n, 2),
                   Form(chart, 1, std::move(ac)), random_polynomial(rng, n, 2));
}

// Module combination of a family frame with degree-1 coefficients; stays
// inside the isotropic subbundle the frame spans.
E1Section random_combination(Rng& rng, const DiracFamily& family) {
  std::vector<ScalarExpr> coeffs;
  for (std::size_t i = 0; i < family.frame.size(); ++i) {
    coeffs.push_back(random_polynomial(rng, family.chart.dim(), 1));
  }
  return combine(family, coeffs);
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Criterion 1: the bracket is antisymmetric, satisfies the Leibniz rule, and
// its Jacobi defect vanishes on sections of an isotropic subbundle. 200
// seeded draws split across both charts and the three laws.
Outcome bracket_laws() {
  const double bound = 1e-8;
  double worst = 0.0;
  int draws = 0;

  const Chart charts[2] = {kR2, kR3};
  const std::uint64_t antisym_seeds[2] = {113, 131};
  const std::uint64_t leibniz_seeds[2] = {211, 223};
  for (int c = 0; c < 2; ++c) {
    const Chart& chart = charts[c];
    const auto points = law_points(chart);

    Rng rng(antisym_seeds[c]);
    for (int k = 0; k < 35; ++k) {
      const E1Section e1 = random_section(rng, chart);
      const E1Section e2 = random_section(rng, chart);
      const E1Section sum =
          (extended_bracket(e1, e2) + extended_bracket(e2, e1)).simplified();
      worst = std::max(worst, max_over_points(sum, points));
      ++draws;
    }

    Rng lrng(leibniz_seeds[c]);
    for (int k = 0; k < 35; ++k) {
      const E1Section e1 = random_section(lrng, chart);
      const E1Section e2 = random_section(lrng, chart);
      const ScalarExpr h = random_polynomial(lrng, chart.dim(), 2);
      const E1Section defect = leibniz_defect(e1, e2, h).simplified();
      worst = std::max(worst, max_over_points(defect, points));
      ++draws;
    }
  }

  // The Jacobi defect is only zero on isotropic subbundles, so the triples
  // are combinations of catalog frames, including a frame that is isotropic
  // but not closed under the bracket.
  const char* frame_names[2][2] = {
      {"homogeneous-poisson-r2", "dirac-graph-r2"},
      {"jacobi-contact-r3", "jacobi-nonintegrable-r3"}};
  const std::uint64_t jacobi_seeds[2] = {311, 313};
  for (int c = 0; c < 2; ++c) {
    const Chart& chart = charts[c];
    const auto points = law_points(chart);
    const DiracFamily families[2] = {
        build_family(catalog_scenario(frame_names[c][0])),
        build_family(catalog_scenario(frame_names[c][1]))};
    Rng rng(jacobi_seeds[c]);
    for (int k = 0; k < 30; ++k) {
      const DiracFamily& family = families[k % 2];
      const E1Section e0 = random_combination(rng, family);
      const E1Section e1 = random_combination(rng, family);
      const E1Section e2 = random_combination(rng, family);
      const E1Section defect = jacobiator_defect(e0, e1, e2).simplified();
      worst = std::max(worst, max_over_points(defect, points));
      ++draws;
    }
  }

  Outcome out;
  out.pass = worst < bound && draws == 200;
  out.detail = std::to_string(draws) + " draws, max law residual " + sci(worst) +
               " (bound " + sci(bound) + ")";
  return out;
}

// Criterion 2: sampled obstruction below 1e-8 exactly when the symbolic
// structure residuals vanish; the non-closing entries stay above 1e-3.
Outcome integrability_dichotomy() {
  const double tol = 1e-8;
  const double floor = 1e-3;
  double worst_integrable = 0.0;
  double least_broken = std::numeric_limits<double>::infinity();
  int entries = 0;
  int broken = 0;
  std::string mismatch;

  for (const auto& entry : catalog()) {
    const Scenario sc = catalog_scenario(entry.name);
    const DiracFamily family = build_family(sc);
    const CertificationReport rep = certify(family, sc.sample, sc.tol);
    const double sampled = std::max(rep.max_t_direct, rep.max_t_closed);

    bool symbolic_zero = true;
    for (const Residual& res : structure_residuals(family)) {
      for (const ScalarExpr& c : res.coeffs) {
        if (!c.simplified().is_zero()) symbolic_zero = false;
      }
    }

    const bool sampled_zero = sampled < tol;
    if (sampled_zero != symbolic_zero) mismatch = entry.name;
    if (symbolic_zero) {
      worst_integrable = std::max(worst_integrable, sampled);
    } else {
      ++broken;
      least_broken = std::min(least_broken, sampled);
    }
    ++entries;
  }

  Outcome out;
  out.pass = mismatch.empty() && broken == 2 && least_broken > floor;
  std::ostringstream os;
  os << entries << " entries, closed max " << sci(worst_integrable) << " (bound "
     << sci(tol) << "), " << broken << " open min " << sci(least_broken)
     << " (floor " << sci(floor) << ")";
  if (!mismatch.empty()) os << ", mismatch at " << mismatch;
  out.detail = os.str();
  return out;
}

// Criterion 3: the lift of each kind's model bracket agrees with the
// extended bracket of the lifted sections on 50 seeded pairs per kind.
Outcome model_bracket_agreement() {
  const double bound = 1e-8;
  const char* names[4] = {"lcp-exp-r3", "precontact-contact-r3",
                          "jacobi-contact-r3", "homogeneous-poisson-r2"};
  double worst = 0.0;
  int pairs = 0;
  for (const char* name : names) {
    const Scenario sc = catalog_scenario(name);
    const DiracFamily family = build_family(sc);
    const ModelBracketReport rep =
        model_bracket_check(family, sc.sample, 50, sc.sample.seed);
    worst = std::max(worst, rep.max_defect);
    pairs += rep.pairs;
  }
  Outcome out;
  out.pass = worst < bound && pairs == 200;
  out.detail = "4 kinds, " + std::to_string(pairs) + " pairs, max defect " +
               sci(worst) + " (bound " + sci(bound) + ")";
  return out;
}

// Criterion 4: every catalog trace completes at least 200 steps without a
// rank or type change. Discrete assertion, no tolerance.
Outcome trace_constancy() {
  int entries = 0;
  int steps_total = 0;
  std::string failure;
  for (const auto& entry : catalog()) {
    const Scenario sc = catalog_scenario(entry.name);
    const DiracFamily family = build_family(sc);
    TraceOptions options = sc.trace;
    options.steps = std::max(options.steps, 200);
    const LeafTrace trace = trace_leaf(family, sc.trace_start, options);
    bool ok = trace.termination == TraceTermination::Completed &&
              static_cast<int>(trace.steps.size()) == options.steps + 1;
    for (const TraceStep& step : trace.steps) {
      ok = ok && step.rank == trace.steps.front().rank &&
           step.type == trace.steps.front().type;
    }
    if (!ok && failure.empty()) failure = entry.name;
    steps_total += static_cast<int>(trace.steps.size());
    ++entries;
  }
  Outcome out;
  out.pass = failure.empty() && entries == 12;
  std::ostringstream os;
  os << entries << " traces, " << steps_total << " steps, rank and type constant";
  if (!failure.empty()) os << ", first break at " << failure;
  out.detail = os.str();
  return out;
}

// Criterion 5: at every analyzed point the extended rank sits in
// [rank, rank + 1], hitting the bottom exactly on lcp points.
Outcome rank_sandwich() {
  SampleConfig config;
  config.grid = 2;
  config.extra = 10;
  config.seed = 91;
  config.lo = -0.9;
  config.hi = 0.9;

  int checked = 0;
  std::string failure;
  for (const auto& entry : catalog()) {
    const Scenario sc = catalog_scenario(entry.name);
    const DiracFamily family = build_family(sc);
    for (const auto& p : sample_points(family.chart, config)) {
      const PointAnalysis pa = analyze_point(family, p);
      const BarAnalysis ba = bar_distribution(family, p);
      const bool sandwich =
          pa.rank <= ba.bar_rank && ba.bar_rank <= pa.rank + 1;
      const bool split = (ba.bar_rank == pa.rank) == (pa.type == LeafType::Lcp);
      if ((!sandwich || !split) && failure.empty()) failure = entry.name;
      ++checked;
    }
  }
  Outcome out;
  out.pass = failure.empty();
  std::ostringstream os;
  os << checked << " points, rank <= extended rank <= rank + 1, equality on lcp only";
  if (!failure.empty()) os << ", first break at " << failure;
  out.detail = os.str();
  return out;
}

// Deviation between the sampled covector and a chart target, contracted
// against the orthonormal tangent basis the analysis returned.
double covector_deviation(const std::vector<double>& sampled,
                          const std::vector<std::vector<double>>& tangent,
                          const std::vector<double>& target) {
  double worst = 0.0;
  for (std::size_t i = 0; i < sampled.size(); ++i) {
    double expected = 0.0;
    for (std::size_t r = 0; r < target.size(); ++r) {
      expected += target[r] * tangent[i][r];
    }
    worst = std::max(worst, std::abs(sampled[i] - expected));
  }
  return worst;
}

// Criterion 6: three frozen leaf recoveries, each measured basis
// independently against the known chart tensors.
Outcome induced_recoveries() {
  const double bound = 1e-9;
  double worst = 0.0;
  std::string failure;

  // Homogeneous pair (d/dx ^ d/dy, x d/dx): eta is -x dy on the open leaf.
  {
    const DiracFamily family = build_family(catalog_scenario("homogeneous-poisson-r2"));
    const std::vector<double> p{0.3, 0.7};
    const InducedLeafStructure leaf = induced_structure(family, p);
    if (leaf.type != LeafType::Precontact || leaf.rank != 2) failure = "homogeneous";
    worst = std::max(worst,
                     covector_deviation(leaf.eta, leaf.tangent, {0.0, -p[0]}));
  }

  // Contact pair on R3: eta is y dx - dz, minus the contact form.
  {
    const DiracFamily family = build_family(catalog_scenario("jacobi-contact-r3"));
    const std::vector<double> p{0.4, -1.2, 2.0};
    const InducedLeafStructure leaf = induced_structure(family, p);
    if (leaf.type != LeafType::Precontact || leaf.rank != 3) failure = "contact";
    worst = std::max(worst,
                     covector_deviation(leaf.eta, leaf.tangent, {p[1], 0.0, -1.0}));
  }

  // Planar pair (d/dx ^ d/dy, d/dy): the leaf carries (-dx^dy, -dx).
  {
    const DiracFamily family = build_family(catalog_scenario("jacobi-lcp-r3"));
    const std::vector<double> p{0.8, -0.1, 5.0};
    const InducedLeafStructure leaf = induced_structure(family, p);
    if (leaf.type != LeafType::Lcp || leaf.rank != 2) failure = "planar";
    worst = std::max(worst,
                     covector_deviation(leaf.lee, leaf.tangent, {-1.0, 0.0, 0.0}));
    // Big form target -dx^dy contracted on the tangent basis.
    const double omega[3][3] = {{0, -1, 0}, {1, 0, 0}, {0, 0, 0}};
    for (int i = 0; i < leaf.rank; ++i) {
      for (int j = 0; j < leaf.rank; ++j) {
        double expected = 0.0;
        for (int r = 0; r < 3; ++r) {
          for (int c = 0; c < 3; ++c) {
            expected += leaf.tangent[i][r] * omega[r][c] * leaf.tangent[j][c];
          }
        }
        worst = std::max(worst, std::abs(leaf.big_form[i][j] - expected));
      }
    }
  }

  Outcome out;
  out.pass = failure.empty() && worst < bound;
  std::ostringstream os;
  os << "3 recoveries, max deviation " << sci(worst) << " (bound " << sci(bound)
     << ")";
  if (!failure.empty()) os << ", wrong leaf type at " << failure;
  out.detail = os.str();
  return out;
}

// Criterion 7: cylinder transport. The twisted bivector closes, the map to
// the cylinder intertwines brackets with time-dependent coefficients, the
// cylinder leaf two-form matches the base prediction, and time minus x is
// constant along the extended trace of the planar pair.
Outcome cylinder_transport() {
  std::ostringstream os;
  bool pass = true;

  const DiracFamily contact = build_family(catalog_scenario("jacobi-contact-r3"));

  SampleConfig closure_config;
  closure_config.grid = 2;
  closure_config.extra = 84;  // 16 lattice + 84 draws = 100 cylinder points
  closure_config.seed = 7;
  const Multivector tilde =
      jacobi_poissonization(contact.bivector, contact.vector_part).simplified();
  const ClosureReport closure = tilde_closure_check(tilde, closure_config);
  pass = pass && closure.points == 100 && closure.max_residual < 1e-9;
  os << "closure " << sci(closure.max_residual) << " at " << closure.points
     << " points (bound 1.0e-09)";

  SampleConfig iso_config;
  iso_config.grid = 2;
  iso_config.extra = 12;
  iso_config.seed = 19;
  double iso_worst = 0.0;
  const char* iso_names[3] = {"jacobi-contact-r3", "jacobi-lcp-r3",
                              "homogeneous-poisson-r2"};
  for (const char* name : iso_names) {
    const DiracFamily family = build_family(catalog_scenario(name));
    const IsomorphismReport iso = check_isomorphism(family, iso_config, 8, 19u);
    iso_worst = std::max(iso_worst, iso.max_defect);
  }
  pass = pass && iso_worst < 1e-8;
  os << ", intertwining " << sci(iso_worst) << " (bound 1.0e-08)";

  SampleConfig leaf_config;
  leaf_config.grid = 2;
  leaf_config.extra = 42;  // 8 lattice + 42 draws = 50 base points
  leaf_config.seed = 29;
  const CylinderLeafReport cyl = cylinder_leaf_check(contact, leaf_config, 2, 29u);
  pass = pass && cyl.comparisons >= 50 && cyl.max_defect < 1e-7;
  os << ", leaf two-form " << sci(cyl.max_defect) << " over " << cyl.comparisons
     << " comparisons (bound 1.0e-07)";

  const DiracFamily planar = build_family(catalog_scenario("jacobi-lcp-r3"));
  const LeafTrace trace =
      trace_bar_leaf(planar, std::vector<double>{0.0, 0.0, 5.0, 0.0}, TraceOptions{});
  double drift = 0.0;
  for (const TraceStep& step : trace.steps) {
    drift = std::max(drift, std::abs(step.point[3] - step.point[0]));
  }
  pass = pass && trace.termination == TraceTermination::Completed && drift < 1e-6;
  os << ", time drift " << sci(drift) << " (bound 1.0e-06)";

  Outcome out;
  out.pass = pass;
  out.detail = os.str();
  return out;
}

// Criterion 8: restriction fibres. The graph family on the x axis gives the
// stated two-section span at 20 points, and the planar pair restricted to a
// leaf matches the family built from the induced tensors.
Outcome restriction_fibres() {
  const double bound = 1e-10;
  double worst = 0.0;
  bool sizes_ok = true;

  {
    const DiracFamily family = build_family(catalog_scenario("dirac-graph-r2"));
    const Submanifold axis{Chart({"u"}), {var(0), ScalarExpr()}};
    const std::vector<std::vector<double>> expected{{1.0, 0.0, 0.0, 0.0},
                                                    {0.0, 0.0, 0.0, 1.0}};
    for (int k = 0; k < 20; ++k) {
      const double u = -0.95 + 0.1 * k;
      const RestrictionFibre fibre =
          restrict_to_submanifold(family, axis, std::vector<double>{u});
      sizes_ok = sizes_ok && fibre.basis.size() == 2;
      worst = std::max(worst, subspace_distance(fibre.basis, expected));
    }
  }

  {
    const DiracFamily ambient = build_family(catalog_scenario("jacobi-lcp-r3"));
    const Submanifold leaf{Chart({"u", "v"}),
                           {var(0), var(1), ScalarExpr::rational(5)}};
    const Chart domain({"u", "v"});
    Form big(domain, 2);
    big.at(0) = num(-1);
    Form lee(domain, 1);
    lee.at(0) = num(-1);
    const DiracFamily induced = from_lcp(big, lee);
    for (int k = 0; k < 20; ++k) {
      const std::vector<double> p{-0.8 + 0.4 * (k % 5), -0.6 + 0.4 * (k / 5)};
      const RestrictionFibre fibre = restrict_to_submanifold(ambient, leaf, p);
      std::vector<std::vector<double>> expected;
      for (const E1Section& s : induced.frame) expected.push_back(s.eval(p));
      sizes_ok = sizes_ok && fibre.basis.size() == 3;
      worst = std::max(worst, subspace_distance(fibre.basis, expected));
    }
  }

  Outcome out;
  out.pass = sizes_ok && worst < bound;
  out.detail = "40 fibres, max subspace distance " + sci(worst) + " (bound " +
               sci(bound) + ")";
  if (!sizes_ok) out.detail += ", wrong fibre dimension";
  return out;
}

// Criterion 9: repeated seeded runs over the full catalog serialize to
// byte-identical reports, digests included.
Outcome deterministic_reports() {
  const auto snapshot = []() {
    std::string blob = tools::run_catalog().report.dump(2);
    for (const auto& entry : catalog()) {
      const Scenario sc = catalog_scenario(entry.name);
      blob += tools::run_check(sc, 6).report.dump(2);
      blob += tools::run_classify(sc, sc.trace_start).report.dump(2);
      blob += tools::run_trace(sc, tools::TraceRequest{sc.trace_start, false, 0.0})
                  .report.dump(2);
    }
    for (const char* name : {"jacobi-contact-r3", "poisson-jacobi-r2"}) {
      blob += tools::run_poissonize(catalog_scenario(name), 4).report.dump(2);
    }
    return blob;
  };

  const std::string first = snapshot();
  const std::string second = snapshot();
  Outcome out;
  out.pass = !first.empty() && first == second;
  out.detail = "two catalog sweeps, " + std::to_string(first.size()) +
               " bytes each, " + (out.pass ? "identical" : "DIFFER");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"bracket laws", bracket_laws},
      {"integrability dichotomy", integrability_dichotomy},
      {"model bracket agreement", model_bracket_agreement},
      {"trace constancy", trace_constancy},
      {"rank sandwich", rank_sandwich},
      {"induced recoveries", induced_recoveries},
      {"cylinder transport", cylinder_transport},
      {"restriction fibres", restriction_fibres},
      {"deterministic reports", deterministic_reports},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& criterion : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << index << "/9 "
              << criterion.name << ": " << outcome.detail << '\n';
  }
  std::cout << (failures == 0 ? "acceptance: all 9 criteria passed"
                              : "acceptance: " + std::to_string(failures) +
                                    " criteria FAILED")
            << '\n';
  return failures == 0 ? 0 : 1;
}

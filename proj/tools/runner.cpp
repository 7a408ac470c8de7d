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

#include "runner.hpp"

#include <sstream>
#include <utility>

#include "e1dirac/error.hpp"
#include "e1dirac/foliation.hpp"
#include "e1dirac/poissonization.hpp"

namespace e1dirac::tools {
namespace {

Json sampling_json(const SampleConfig& sample) {
  Json j;
  j["grid"] = sample.grid;
  j["points"] = sample.extra;
  j["seed"] = sample.seed;
  return j;
}

std::string short_num(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

Json step_json(const TraceStep& step) {
  Json j;
  j["point"] = step.point;
  j["rank"] = step.rank;
  j["kernel_dim"] = step.kernel_dim;
  j["type"] = leaf_type_name(step.type);
  return j;
}

}  // namespace

RunResult run_check(const Scenario& scenario, int pairs) {
  DiracFamily family = build_family(scenario);
  CertificationReport cert = certify(family, scenario.sample, scenario.tol);

  Json j;
  j["command"] = "check";
  j["scenario"] = scenario_json(scenario);
  j["sampling"] = sampling_json(scenario.sample);
  j["tolerance"] = scenario.tol;
  Json c;
  c["points"] = cert.points;
  c["max_isotropy"] = cert.max_isotropy;
  c["max_t_direct"] = cert.max_t_direct;
  c["max_t_closed"] = cert.max_t_closed;
  c["max_t_mismatch"] = cert.max_t_mismatch;
  c["frame_min_sv"] = cert.frame_min_sv;
  Json residuals = Json::object();
  for (const auto& [name, value] : cert.residuals) residuals[name] = value;
  c["residuals"] = residuals;
  c["integrable"] = cert.integrable;
  j["certification"] = c;
  if (cert.integrable && pairs > 0) {
    ModelBracketReport mb = model_bracket_check(family, scenario.sample, pairs,
                                                scenario.sample.seed);
    Json m;
    m["pairs"] = mb.pairs;
    m["points"] = mb.points;
    m["max_defect"] = mb.max_defect;
    j["model_bracket"] = m;
  }
  seal(j);

  std::ostringstream os;
  os << scenario.name << ": " << (cert.integrable ? "integrable" : "not integrable")
     << ", max obstruction " << short_num(cert.max_t_direct) << " over " << cert.points
     << " points (tol " << short_num(scenario.tol) << ")";
  return {std::move(j), cert.integrable ? 0 : 1, os.str()};
}

RunResult run_classify(const Scenario& scenario, std::span<const double> at) {
  DiracFamily family = build_family(scenario);
  PointAnalysis analysis = analyze_point(family, at);
  BarAnalysis bar = bar_distribution(family, at);
  InducedLeafStructure induced = induced_structure(family, at);

  Json j;
  j["command"] = "classify";
  j["scenario"] = scenario_json(scenario);
  j["point"] = std::vector<double>(at.begin(), at.end());
  Json a;
  a["rank"] = analysis.rank;
  a["kernel_dim"] = analysis.kernel_dim;
  a["type"] = leaf_type_name(analysis.type);
  a["phi_kernel_max"] = analysis.phi_kernel_max;
  a["singular_values"] = analysis.singular_values;
  j["analysis"] = a;
  Json b;
  b["rank"] = bar.bar_rank;
  b["singular_values"] = bar.singular_values;
  j["bar"] = b;
  Json ind;
  ind["type"] = leaf_type_name(induced.type);
  ind["rank"] = induced.rank;
  ind["tangent"] = induced.tangent;
  if (induced.type == LeafType::Precontact) {
    ind["eta"] = induced.eta;
  } else {
    ind["lee"] = induced.lee;
  }
  ind["big_form"] = induced.big_form;
  j["induced"] = ind;
  // The symbolic one-form exists only when the chart is a single regular
  // leaf; silence is the honest answer elsewhere.
  try {
    j["eta_symbolic"] = form_json(induced_eta_symbolic(family));
  } catch (const SingularSystem&) {
  } catch (const DomainError&) {
  }
  seal(j);

  std::ostringstream os;
  os << scenario.name << ": rank " << analysis.rank << " " << leaf_type_name(analysis.type)
     << " leaf, bar rank " << bar.bar_rank;
  return {std::move(j), 0, os.str()};
}

RunResult run_trace(const Scenario& scenario, const TraceRequest& request) {
  DiracFamily family = build_family(scenario);
  std::vector<double> start = request.start;
  LeafTrace trace;
  if (request.bar) {
    start.push_back(request.t0);
    trace = trace_bar_leaf(family, start, scenario.trace);
  } else {
    trace = trace_leaf(family, start, scenario.trace);
  }

  Json j;
  j["command"] = "trace";
  j["scenario"] = scenario_json(scenario);
  Json opts;
  opts["steps"] = scenario.trace.steps;
  opts["dt"] = scenario.trace.dt;
  opts["bar"] = request.bar;
  j["options"] = opts;
  j["start"] = start;
  Json t;
  t["termination"] = trace_termination_name(trace.termination);
  t["steps"] = trace.steps.size();
  t["initial"] = step_json(trace.steps.front());
  t["final"] = step_json(trace.steps.back());
  Json points = Json::array();
  for (const TraceStep& step : trace.steps) points.push_back(step.point);
  t["points"] = points;
  j["trace"] = t;
  seal(j);

  bool completed = trace.termination == TraceTermination::Completed;
  std::ostringstream os;
  os << scenario.name << ": " << trace_termination_name(trace.termination) << " after "
     << trace.steps.size() << " recorded steps, final rank " << trace.steps.back().rank << " "
     << leaf_type_name(trace.steps.back().type);
  return {std::move(j), completed ? 0 : 1, os.str()};
}

RunResult run_poissonize(const Scenario& scenario, int pairs) {
  DiracFamily family = build_family(scenario);
  CertificationReport cert = certify(family, scenario.sample, scenario.tol);
  if (!cert.integrable) {
    throw NotIntegrable("scenario '" + scenario.name +
                        "' failed certification; cylinder transport needs an integrable family");
  }

  Json j;
  j["command"] = "poissonize";
  j["scenario"] = scenario_json(scenario);
  j["sampling"] = sampling_json(scenario.sample);
  Json gate;
  gate["integrable"] = true;
  gate["max_t_direct"] = cert.max_t_direct;
  j["gate"] = gate;

  double closure_max = 0.0;
  bool has_tilde = scenario.kind == FamilyKind::Jacobi ||
                   scenario.kind == FamilyKind::DiracBivector;
  if (has_tilde) {
    VectorField e = scenario.kind == FamilyKind::Jacobi ? scenario.vector_part
                                                        : VectorField(scenario.chart);
    Multivector tilde = jacobi_poissonization(scenario.bivector, e).simplified();
    j["tilde"] = multivector_json(tilde);
    ClosureReport closure = tilde_closure_check(tilde, scenario.sample);
    closure_max = closure.max_residual;
    Json cl;
    cl["points"] = closure.points;
    cl["max_residual"] = closure.max_residual;
    j["closure"] = cl;
  }

  IsomorphismReport iso = check_isomorphism(family, scenario.sample, pairs,
                                            static_cast<unsigned>(scenario.sample.seed));
  Json im;
  im["pairs"] = iso.pairs;
  im["points"] = iso.points;
  im["max_defect"] = iso.max_defect;
  j["isomorphism"] = im;

  CylinderLeafReport leaves = cylinder_leaf_check(family, scenario.sample, pairs,
                                                  static_cast<unsigned>(scenario.sample.seed) + 1);
  Json cy;
  cy["comparisons"] = leaves.comparisons;
  cy["max_defect"] = leaves.max_defect;
  j["cylinder_leaves"] = cy;
  seal(j);

  std::ostringstream os;
  os << scenario.name << ": bracket defect " << short_num(iso.max_defect) << ", leaf defect "
     << short_num(leaves.max_defect);
  if (has_tilde) os << ", closure " << short_num(closure_max);
  return {std::move(j), 0, os.str()};
}

RunResult run_catalog() {
  Json j;
  j["command"] = "catalog";
  Json entries = Json::array();
  for (const CatalogEntry& entry : catalog()) {
    Scenario sc = catalog_scenario(entry.name);
    Json row;
    row["name"] = sc.name;
    row["kind"] = family_kind_name(sc.kind);
    row["chart"] = sc.chart.coords();
    entries.push_back(row);
  }
  j["entries"] = entries;
  seal(j);
  return {std::move(j), 0, std::to_string(catalog().size()) + " catalog entries"};
}

}  // namespace e1dirac::tools

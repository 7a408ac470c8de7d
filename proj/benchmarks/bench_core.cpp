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

#include <benchmark/benchmark.h>

#include <vector>

#include "e1dirac/families.hpp"
#include "e1dirac/foliation.hpp"
#include "e1dirac/sampling.hpp"
#include "e1dirac/sections.hpp"
#include "scenario.hpp"

namespace {

using namespace e1dirac;

const Chart kR3({"x", "y", "z"});

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

// Symbolic bracket construction including simplification, the dominant cost
// of certification and the model comparisons.
void BM_ExtendedBracket(benchmark::State& state) {
  Rng rng(5);
  const E1Section a = random_section(rng, kR3);
  const E1Section b = random_section(rng, kR3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extended_bracket(a, b).simplified());
  }
}
BENCHMARK(BM_ExtendedBracket);

// Numeric evaluation of a fixed simplified bracket, the sampling inner loop.
void BM_SectionEval(benchmark::State& state) {
  Rng rng(5);
  const E1Section a = random_section(rng, kR3);
  const E1Section b = random_section(rng, kR3);
  const E1Section bracket = extended_bracket(a, b).simplified();
  const std::vector<double> p{0.3, -0.4, 0.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracket.eval(p));
  }
}
BENCHMARK(BM_SectionEval);

// Pointwise rank and type classification, one SVD per call.
void BM_AnalyzePoint(benchmark::State& state) {
  const DiracFamily family =
      tools::build_family(tools::catalog_scenario("jacobi-contact-r3"));
  const std::vector<double> p{0.4, -1.2, 2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_point(family, p));
  }
}
BENCHMARK(BM_AnalyzePoint);

// Fifty integration steps with a classification at each step.
void BM_TraceLeaf(benchmark::State& state) {
  const DiracFamily family =
      tools::build_family(tools::catalog_scenario("jacobi-lcp-r3"));
  const std::vector<double> start{0.0, 0.0, 5.0};
  TraceOptions options;
  options.steps = 50;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_leaf(family, start, options));
  }
}
BENCHMARK(BM_TraceLeaf);

// Full certification of a catalog entry at a reduced sample count.
void BM_Certify(benchmark::State& state) {
  const tools::Scenario sc = tools::catalog_scenario("lcp-exp-r3");
  const DiracFamily family = tools::build_family(sc);
  SampleConfig config = sc.sample;
  config.grid = 2;
  config.extra = 8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify(family, config, sc.tol));
  }
}
BENCHMARK(BM_Certify);

// Scenario text to validated tensors, the CLI front door.
void BM_ParseScenario(benchmark::State& state) {
  std::string text;
  for (const auto& entry : tools::catalog()) {
    if (entry.name == "lcp-exp-r3") text = entry.text;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(tools::parse_scenario(text));
  }
}
BENCHMARK(BM_ParseScenario);

}  // namespace

BENCHMARK_MAIN();

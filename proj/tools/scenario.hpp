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

#ifndef E1DIRAC_TOOLS_SCENARIO_HPP_
#define E1DIRAC_TOOLS_SCENARIO_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "e1dirac/chart.hpp"
#include "e1dirac/families.hpp"
#include "e1dirac/foliation.hpp"
#include "e1dirac/sampling.hpp"
#include "e1dirac/tensor.hpp"

namespace e1dirac::tools {

// Text form of a family plus run parameters: chart, kind, defining tensors,
// sampling controls, and trace defaults. Tensor slots a kind does not use
// stay zero, mirroring DiracFamily.
struct Scenario {
  std::string name = "unnamed";
  Chart chart;
  FamilyKind kind = FamilyKind::DiracForm;
  Form form2;
  Form form1;
  Multivector bivector;
  VectorField vector_part;
  SampleConfig sample;
  double tol = 1e-8;
  std::vector<double> trace_start;  // dim entries, defaults to the origin
  TraceOptions trace;
};

struct Diagnostic {
  int line = 0;  // 1-based; 0 marks a file-level message
  int col = 0;   // 1-based byte column
  std::string message;
};

struct ParseResult {
  bool ok = false;
  Scenario scenario;  // meaningful only when ok
  std::vector<Diagnostic> diagnostics;
};

// Line-oriented "key = value" text; '#' starts a comment. Keys: name, chart,
// kind, form2, form1, bivector, vector, grid, points, seed, tol, trace_start,
// steps, dt. Tensor values are bracket literals such as
// "[ x^y: exp(z), y^z: -y ]"; "[ ]" is the zero tensor. Collects every
// problem instead of stopping at the first.
ParseResult parse_scenario(std::string_view text);

// "line:col: message" per diagnostic, newline separated.
std::string format_diagnostics(std::span<const Diagnostic> diagnostics);

// Construct the family the scenario describes.
DiracFamily build_family(const Scenario& scenario);

// Built-in scenarios in canonical text form.
struct CatalogEntry {
  std::string name;
  std::string text;
};
const std::vector<CatalogEntry>& catalog();

// Parse a catalog entry; throws DomainError on an unknown name.
Scenario catalog_scenario(std::string_view name);

}  // namespace e1dirac::tools

#endif  // E1DIRAC_TOOLS_SCENARIO_HPP_

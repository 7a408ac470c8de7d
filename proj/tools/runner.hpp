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

#ifndef E1DIRAC_TOOLS_RUNNER_HPP_
#define E1DIRAC_TOOLS_RUNNER_HPP_

#include <span>
#include <string>
#include <vector>

#include "report.hpp"
#include "scenario.hpp"

namespace e1dirac::tools {

// One executed command: the sealed report, the process exit code, and a one
// line human summary for stderr.
struct RunResult {
  Json report;
  int exit_code = 0;
  std::string summary;
};

// Certification verdict; exit 1 when the family is not integrable.
RunResult run_check(const Scenario& scenario, int pairs);

// Pointwise leaf rank, type, and induced structure.
RunResult run_classify(const Scenario& scenario, std::span<const double> at);

struct TraceRequest {
  std::vector<double> start;  // chart dim entries
  bool bar = false;           // trace the extended distribution on chart x time
  double t0 = 0.0;            // start time when bar is set
};

// Leaf integration; exit 1 when the trace stops early.
RunResult run_trace(const Scenario& scenario, const TraceRequest& request);

// Cylinder transport checks; throws NotIntegrable when certification fails.
RunResult run_poissonize(const Scenario& scenario, int pairs);

RunResult run_catalog();

}  // namespace e1dirac::tools

#endif  // E1DIRAC_TOOLS_RUNNER_HPP_

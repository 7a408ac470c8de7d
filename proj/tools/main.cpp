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

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "e1dirac/error.hpp"
#include "runner.hpp"
#include "scenario.hpp"

namespace {

using e1dirac::DomainError;
using e1dirac::tools::ParseResult;
using e1dirac::tools::RunResult;
using e1dirac::tools::Scenario;

std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::size_t end = comma == std::string::npos ? text.size() : comma;
    std::string_view tok(text.data() + pos, end - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    double value = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw DomainError("'" + std::string(tok) + "' is not a number");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// A path, or @name for a catalog entry.
Scenario load_scenario(const std::string& ref) {
  if (!ref.empty() && ref.front() == '@') {
    return e1dirac::tools::catalog_scenario(std::string_view(ref).substr(1));
  }
  std::ifstream in(ref, std::ios::binary);
  if (!in) throw DomainError("cannot open scenario file '" + ref + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  ParseResult parsed = e1dirac::tools::parse_scenario(ss.str());
  if (!parsed.ok) {
    throw DomainError(ref + ":\n" + e1dirac::tools::format_diagnostics(parsed.diagnostics));
  }
  return std::move(parsed.scenario);
}

// Reports go to stdout (and --out when given), summaries to stderr, so pipes
// see pure JSON.
void emit(const RunResult& result, const std::string& out_path) {
  std::string bytes = result.report.dump(2);
  bytes += '\n';
  std::cout << bytes;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DomainError("cannot write report to '" + out_path + "'");
    out << bytes;
  }
  if (!result.summary.empty()) std::cerr << result.summary << '\n';
}

const char* class_name(e1dirac::ErrorClass cls) {
  switch (cls) {
    case e1dirac::ErrorClass::VerdictFailure:
      return "verdict";
    case e1dirac::ErrorClass::InputError:
      return "input";
    case e1dirac::ErrorClass::NumericalRefusal:
      return "numerical";
  }
  return "input";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chart toolkit for extended Dirac families"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "e1dirac 0.1.0");

  std::string scenario_ref;
  std::string out_path;
  std::string at_text;
  double t0 = 0.0;
  double tol = 0.0;
  double dt = 0.0;
  int steps = 0;
  int grid = 0;
  int points = 0;
  int pairs = 8;
  std::uint64_t seed = 0;
  bool bar = false;

  auto add_scenario = [&](CLI::App* cmd) {
    cmd->add_option("scenario", scenario_ref, "Scenario file, or @name for a catalog entry")
        ->required();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Also write the report to this file");
  };
  auto add_sampling = [&](CLI::App* cmd) {
    cmd->add_option("--grid", grid, "Lattice points per axis")->check(CLI::NonNegativeNumber);
    cmd->add_option("--points", points, "Extra random sample points")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", seed, "Sampling seed");
    cmd->add_option("--tol", tol, "Certification tolerance")->check(CLI::PositiveNumber);
  };

  CLI::App* check = app.add_subcommand("check", "Certify that a family closes under the bracket");
  add_scenario(check);
  add_sampling(check);
  check->add_option("--pairs", pairs, "Random pairs for the model bracket comparison")
      ->check(CLI::NonNegativeNumber);
  add_out(check);

  CLI::App* classify =
      app.add_subcommand("classify", "Leaf rank, type, and induced structure at a point");
  add_scenario(classify);
  classify->add_option("--at", at_text, "Comma-separated point, defaults to trace_start");
  add_out(classify);

  CLI::App* trace = app.add_subcommand("trace", "Integrate the leaf through a start point");
  add_scenario(trace);
  trace->add_option("--at", at_text, "Comma-separated start point, defaults to trace_start");
  trace->add_option("--steps", steps, "Integration steps")->check(CLI::PositiveNumber);
  trace->add_option("--dt", dt, "Step size")->check(CLI::PositiveNumber);
  trace->add_flag("--bar", bar, "Trace the extended distribution on chart x time");
  trace->add_option("--t0", t0, "Start time for --bar traces");
  add_out(trace);

  CLI::App* poissonize =
      app.add_subcommand("poissonize", "Transport an integrable family to the cylinder");
  add_scenario(poissonize);
  add_sampling(poissonize);
  poissonize->add_option("--pairs", pairs, "Random section pairs for the bracket comparison")
      ->check(CLI::NonNegativeNumber);
  add_out(poissonize);

  CLI::App* cat = app.add_subcommand("catalog", "List the built-in scenarios");
  add_out(cat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunResult result;
    if (cat->parsed()) {
      result = e1dirac::tools::run_catalog();
    } else {
      Scenario sc = load_scenario(scenario_ref);
      auto apply_sampling = [&](CLI::App* cmd) {
        if (cmd->count("--grid") > 0) sc.sample.grid = grid;
        if (cmd->count("--points") > 0) sc.sample.extra = points;
        if (cmd->count("--seed") > 0) sc.sample.seed = seed;
        if (cmd->count("--tol") > 0) sc.tol = tol;
      };
      auto point_arg = [&](CLI::App* cmd) {
        std::vector<double> at = sc.trace_start;
        if (cmd->count("--at") > 0) at = parse_csv_doubles(at_text);
        if (at.size() != static_cast<std::size_t>(sc.chart.dim())) {
          throw DomainError("--at has " + std::to_string(at.size()) + " value(s), chart " +
                            sc.chart.str() + " needs " + std::to_string(sc.chart.dim()));
        }
        return at;
      };
      if (check->parsed()) {
        apply_sampling(check);
        result = e1dirac::tools::run_check(sc, pairs);
      } else if (classify->parsed()) {
        result = e1dirac::tools::run_classify(sc, point_arg(classify));
      } else if (trace->parsed()) {
        if (trace->count("--steps") > 0) sc.trace.steps = steps;
        if (trace->count("--dt") > 0) sc.trace.dt = dt;
        e1dirac::tools::TraceRequest request;
        request.start = point_arg(trace);
        request.bar = bar;
        request.t0 = t0;
        result = e1dirac::tools::run_trace(sc, request);
      } else {
        apply_sampling(poissonize);
        result = e1dirac::tools::run_poissonize(sc, pairs);
      }
    }
    emit(result, out_path);
    return result.exit_code;
  } catch (const e1dirac::Error& e) {
    e1dirac::tools::Json err;
    e1dirac::tools::Json inner;
    inner["class"] = class_name(e.error_class());
    inner["message"] = e.what();
    err["error"] = inner;
    std::cout << err.dump(2) << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.error_class());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

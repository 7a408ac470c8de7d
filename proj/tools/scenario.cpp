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

#include "scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "e1dirac/error.hpp"
#include "e1dirac/expr_parse.hpp"

namespace e1dirac::tools {
namespace {

struct RawPair {
  std::string key;
  std::string value;
  int line = 0;
  int key_col = 0;
  int value_col = 0;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Split the text into key/value pairs with 1-based positions; '#' starts a
// comment, blank lines are skipped.
std::vector<RawPair> scan_lines(std::string_view text, std::vector<Diagnostic>& diags) {
  std::vector<RawPair> pairs;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++line_no;
    std::size_t eol = text.find('\n', pos);
    std::size_t end = eol == std::string_view::npos ? text.size() : eol;
    std::string_view line = text.substr(pos, end - pos);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first < line.size()) {
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        diags.push_back({line_no, static_cast<int>(first) + 1, "expected 'key = value'"});
      } else if (trim(line.substr(0, eq)).empty()) {
        diags.push_back({line_no, static_cast<int>(eq) + 1, "missing key before '='"});
      } else {
        std::size_t vstart = eq + 1;
        while (vstart < line.size() && is_space(line[vstart])) ++vstart;
        pairs.push_back({std::string(trim(line.substr(0, eq))),
                         std::string(trim(line.substr(eq + 1))), line_no,
                         static_cast<int>(first) + 1, static_cast<int>(vstart) + 1});
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return pairs;
}

bool to_ll(std::string_view s, long long* out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool to_u64(std::string_view s, std::uint64_t* out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool to_double(std::string_view s, double* out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool kind_from_name(std::string_view name, FamilyKind* out) {
  for (FamilyKind kind :
       {FamilyKind::DiracForm, FamilyKind::DiracBivector, FamilyKind::Lcp, FamilyKind::Precontact,
        FamilyKind::Jacobi, FamilyKind::HomogeneousPoisson}) {
    if (name == family_kind_name(kind)) {
      *out = kind;
      return true;
    }
  }
  return false;
}

struct TensorTerm {
  std::vector<int> idx;
  ScalarExpr coeff;
};

// Parse "[ x^y: expr, ... ]" into index tuples and coefficients. Diagnostics
// carry the column of the offending byte inside the value.
bool parse_tensor_literal(const RawPair& raw, const Chart& chart, int degree,
                          std::vector<TensorTerm>* out, std::vector<Diagnostic>* diags) {
  std::string_view v = raw.value;
  auto fail = [&](std::size_t off, std::string message) {
    diags->push_back({raw.line, raw.value_col + static_cast<int>(off), std::move(message)});
    return false;
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < v.size() && is_space(v[i])) ++i;
  };
  skip_ws();
  if (i >= v.size() || v[i] != '[') return fail(i, "tensor literal must start with '['");
  ++i;
  skip_ws();
  std::set<std::vector<int>> seen;
  bool done = i < v.size() && v[i] == ']';
  if (done) ++i;
  while (!done) {
    skip_ws();
    std::size_t comp_start = i;
    std::vector<int> idx;
    while (true) {
      std::size_t name_start = i;
      while (i < v.size() && (std::isalnum(static_cast<unsigned char>(v[i])) || v[i] == '_')) ++i;
      if (i == name_start) return fail(i, "expected a coordinate name");
      std::string_view name = v.substr(name_start, i - name_start);
      int coord = chart.index_of(name);
      if (coord < 0 || coord >= chart.dim()) {
        return fail(name_start, "unknown coordinate '" + std::string(name) + "'");
      }
      idx.push_back(coord);
      skip_ws();
      if (i < v.size() && v[i] == '^') {
        ++i;
        skip_ws();
        continue;
      }
      break;
    }
    if (static_cast<int>(idx.size()) != degree) {
      return fail(comp_start, "component has " + std::to_string(idx.size()) +
                                  " coordinate(s), tensor degree is " + std::to_string(degree));
    }
    std::vector<int> sorted = idx;
    if (sort_sign(sorted) == 0) return fail(comp_start, "repeated coordinate in component");
    if (!seen.insert(sorted).second) return fail(comp_start, "duplicate component");
    if (i >= v.size() || v[i] != ':') return fail(i, "expected ':' after the component");
    ++i;
    std::size_t expr_start = i;
    int depth = 0;
    while (i < v.size()) {
      char c = v[i];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (depth == 0) break;
        --depth;
      } else if (depth == 0 && (c == ',' || c == ']')) {
        break;
      }
      ++i;
    }
    if (i >= v.size()) return fail(v.size(), "unterminated tensor literal");
    if (v[i] != ',' && v[i] != ']') return fail(i, "expected ',' or ']'");
    std::string_view expr_text = trim(v.substr(expr_start, i - expr_start));
    if (expr_text.empty()) return fail(expr_start, "empty coefficient expression");
    ScalarExpr coeff;
    try {
      coeff = parse_expr(expr_text, chart);
    } catch (const ExprParseError& e) {
      return fail(static_cast<std::size_t>(expr_text.data() - v.data()) + e.pos, e.what());
    }
    out->push_back({std::move(idx), std::move(coeff)});
    if (v[i] == ',') {
      ++i;
      continue;
    }
    ++i;
    done = true;
  }
  skip_ws();
  if (i != v.size()) return fail(i, "unexpected text after ']'");
  return true;
}

}  // namespace

ParseResult parse_scenario(std::string_view text) {
  ParseResult result;
  std::vector<Diagnostic>& diags = result.diagnostics;
  std::vector<RawPair> pairs = scan_lines(text, diags);

  static const std::set<std::string, std::less<>> kKnown = {
      "name", "chart", "kind",  "form2", "form1",       "bivector", "vector",
      "grid", "points", "seed", "tol",   "trace_start", "steps",    "dt"};
  std::map<std::string, const RawPair*, std::less<>> by_key;
  for (const RawPair& p : pairs) {
    if (!kKnown.contains(p.key)) {
      diags.push_back({p.line, p.key_col, "unknown key '" + p.key + "'"});
      continue;
    }
    if (!by_key.emplace(p.key, &p).second) {
      diags.push_back({p.line, p.key_col, "duplicate key '" + p.key + "'"});
    }
  }
  auto find = [&](std::string_view key) -> const RawPair* {
    auto it = by_key.find(key);
    return it == by_key.end() ? nullptr : it->second;
  };

  Scenario& sc = result.scenario;

  bool chart_ok = false;
  if (const RawPair* p = find("chart")) {
    std::vector<std::string> names;
    std::istringstream ss(p->value);
    std::string tok;
    while (ss >> tok) names.push_back(tok);
    if (names.empty()) {
      diags.push_back({p->line, p->value_col, "chart needs at least one coordinate name"});
    } else {
      try {
        sc.chart = Chart(std::move(names));
        chart_ok = true;
      } catch (const DomainError& e) {
        diags.push_back({p->line, p->value_col, e.what()});
      }
    }
  } else {
    diags.push_back({0, 0, "missing required key 'chart'"});
  }
  if (chart_ok) {
    sc.form2 = Form(sc.chart, 2);
    sc.form1 = Form(sc.chart, 1);
    sc.bivector = Multivector(sc.chart, 2);
    sc.vector_part = VectorField(sc.chart);
    sc.trace_start.assign(static_cast<std::size_t>(sc.chart.dim()), 0.0);
  }

  bool kind_ok = false;
  if (const RawPair* p = find("kind")) {
    if (kind_from_name(p->value, &sc.kind)) {
      kind_ok = true;
    } else {
      diags.push_back({p->line, p->value_col,
                       "unknown kind '" + p->value +
                           "'; expected one of dirac_form, dirac_bivector, lcp, precontact, "
                           "jacobi, homogeneous_poisson"});
    }
  } else {
    diags.push_back({0, 0, "missing required key 'kind'"});
  }

  if (const RawPair* p = find("name")) {
    if (p->value.empty()) {
      diags.push_back({p->line, p->value_col, "empty name"});
    } else {
      sc.name = p->value;
    }
  }

  auto load_tensor = [&](const char* key, int degree, auto apply) {
    const RawPair* p = find(key);
    if (p == nullptr || !chart_ok) return;
    std::vector<TensorTerm> terms;
    if (parse_tensor_literal(*p, sc.chart, degree, &terms, &diags)) {
      for (TensorTerm& term : terms) apply(term);
    }
  };
  load_tensor("form2", 2, [&](TensorTerm& t) { sc.form2.add_term(t.idx, t.coeff); });
  load_tensor("form1", 1, [&](TensorTerm& t) { sc.form1.add_term(t.idx, t.coeff); });
  load_tensor("bivector", 2, [&](TensorTerm& t) { sc.bivector.add_term(t.idx, t.coeff); });
  load_tensor("vector", 1, [&](TensorTerm& t) { sc.vector_part.comp(t.idx[0]) = t.coeff; });

  if (const RawPair* p = find("grid")) {
    long long v = 0;
    if (!to_ll(p->value, &v) || v < 0 || v > 64) {
      diags.push_back({p->line, p->value_col, "grid must be an integer in 0..64"});
    } else {
      sc.sample.grid = static_cast<int>(v);
    }
  }
  if (const RawPair* p = find("points")) {
    long long v = 0;
    if (!to_ll(p->value, &v) || v < 0 || v > 100000) {
      diags.push_back({p->line, p->value_col, "points must be an integer in 0..100000"});
    } else {
      sc.sample.extra = static_cast<int>(v);
    }
  }
  if (const RawPair* p = find("seed")) {
    std::uint64_t v = 0;
    if (!to_u64(p->value, &v)) {
      diags.push_back({p->line, p->value_col, "seed must be an unsigned integer"});
    } else {
      sc.sample.seed = v;
    }
  }
  if (const RawPair* p = find("tol")) {
    double v = 0.0;
    if (!to_double(p->value, &v) || !(v > 0.0)) {
      diags.push_back({p->line, p->value_col, "tol must be a positive number"});
    } else {
      sc.tol = v;
    }
  }
  if (const RawPair* p = find("dt")) {
    double v = 0.0;
    if (!to_double(p->value, &v) || !(v > 0.0)) {
      diags.push_back({p->line, p->value_col, "dt must be a positive number"});
    } else {
      sc.trace.dt = v;
    }
  }
  if (const RawPair* p = find("steps")) {
    long long v = 0;
    if (!to_ll(p->value, &v) || v < 1 || v > 1000000) {
      diags.push_back({p->line, p->value_col, "steps must be an integer in 1..1000000"});
    } else {
      sc.trace.steps = static_cast<int>(v);
    }
  }
  if (const RawPair* p = find("trace_start")) {
    std::istringstream ss(p->value);
    std::string tok;
    std::vector<double> vals;
    bool bad = false;
    while (ss >> tok) {
      double d = 0.0;
      if (!to_double(tok, &d)) {
        bad = true;
        break;
      }
      vals.push_back(d);
    }
    if (bad) {
      diags.push_back({p->line, p->value_col, "trace_start entries must be numbers"});
    } else if (chart_ok && vals.size() != static_cast<std::size_t>(sc.chart.dim())) {
      diags.push_back({p->line, p->value_col,
                       "trace_start has " + std::to_string(vals.size()) + " value(s), chart has " +
                           std::to_string(sc.chart.dim()) + " coordinate(s)"});
    } else if (chart_ok) {
      sc.trace_start = std::move(vals);
    }
  }

  if (kind_ok) {
    auto uses = [&](std::string_view key) {
      switch (sc.kind) {
        case FamilyKind::DiracForm:
          return key == "form2";
        case FamilyKind::DiracBivector:
          return key == "bivector";
        case FamilyKind::Lcp:
          return key == "form2" || key == "form1";
        case FamilyKind::Precontact:
          return key == "form1";
        case FamilyKind::Jacobi:
        case FamilyKind::HomogeneousPoisson:
          return key == "bivector" || key == "vector";
      }
      return false;
    };
    for (const char* key : {"form2", "form1", "bivector", "vector"}) {
      const RawPair* p = find(key);
      if (p != nullptr && !uses(key)) {
        diags.push_back({p->line, p->key_col, std::string("key '") + key +
                                                  "' is not used by kind '" +
                                                  family_kind_name(sc.kind) + "'"});
      }
    }
  }

  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return a.line != b.line ? a.line < b.line : a.col < b.col;
  });
  result.ok = diags.empty();
  return result;
}

std::string format_diagnostics(std::span<const Diagnostic> diagnostics) {
  std::ostringstream os;
  for (std::size_t i = 0; i < diagnostics.size(); ++i) {
    const Diagnostic& d = diagnostics[i];
    if (i > 0) os << '\n';
    if (d.line > 0) {
      os << d.line << ':' << d.col << ": ";
    } else {
      os << "input: ";
    }
    os << d.message;
  }
  return os.str();
}

DiracFamily build_family(const Scenario& scenario) {
  switch (scenario.kind) {
    case FamilyKind::DiracForm:
      return from_dirac_graph(scenario.form2);
    case FamilyKind::DiracBivector:
      return from_dirac_graph(scenario.bivector);
    case FamilyKind::Lcp:
      return from_lcp(scenario.form2, scenario.form1);
    case FamilyKind::Precontact:
      return from_precontact(scenario.form1);
    case FamilyKind::Jacobi:
      return from_jacobi(scenario.bivector, scenario.vector_part);
    case FamilyKind::HomogeneousPoisson:
      return from_homogeneous_poisson(scenario.bivector, scenario.vector_part);
  }
  throw DomainError("unknown family kind");
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"zero-dirac-r2",
       "name = zero-dirac-r2\n"
       "chart = x y\n"
       "kind = dirac_form\n"
       "form2 = [ ]\n"
       "trace_start = 0.5 0.5\n"},
      {"dirac-graph-r2",
       "name = dirac-graph-r2\n"
       "chart = x y\n"
       "kind = dirac_form\n"
       "form2 = [ x^y: 1 ]\n"},
      {"presym-lcp-r2",
       "name = presym-lcp-r2\n"
       "chart = x y\n"
       "kind = lcp\n"
       "form2 = [ x^y: 1 ]\n"
       "form1 = [ ]\n"},
      {"lcp-exp-r3",
       "name = lcp-exp-r3\n"
       "chart = x y z\n"
       "kind = lcp\n"
       "form2 = [ x^y: exp(z) ]\n"
       "form1 = [ z: 1 ]\n"},
      {"precontact-contact-r3",
       "name = precontact-contact-r3\n"
       "chart = x y z\n"
       "kind = precontact\n"
       "form1 = [ x: -y, z: 1 ]\n"},
      {"jacobi-contact-r3",
       "name = jacobi-contact-r3\n"
       "chart = x y z\n"
       "kind = jacobi\n"
       "bivector = [ x^y: 1, y^z: -y ]\n"
       "vector = [ z: 1 ]\n"},
      {"jacobi-lcp-r3",
       "name = jacobi-lcp-r3\n"
       "chart = x y z\n"
       "kind = jacobi\n"
       "bivector = [ x^y: 1 ]\n"
       "vector = [ y: 1 ]\n"
       "trace_start = 0 0 5\n"},
      {"homogeneous-poisson-r2",
       "name = homogeneous-poisson-r2\n"
       "chart = x y\n"
       "kind = homogeneous_poisson\n"
       "bivector = [ x^y: 1 ]\n"
       "vector = [ x: x ]\n"
       "trace_start = 0.3 0.4\n"},
      {"jacobi-nonintegrable-r3",
       "name = jacobi-nonintegrable-r3\n"
       "chart = x y z\n"
       "kind = jacobi\n"
       "bivector = [ x^y: 1 ]\n"
       "vector = [ z: 1 ]\n"},
      {"homogeneous-nonintegrable-r2",
       "name = homogeneous-nonintegrable-r2\n"
       "chart = x y\n"
       "kind = homogeneous_poisson\n"
       "bivector = [ x^y: 1 ]\n"
       "vector = [ y: x ]\n"},
      {"jacobi-translation-r1",
       "name = jacobi-translation-r1\n"
       "chart = x\n"
       "kind = jacobi\n"
       "bivector = [ ]\n"
       "vector = [ x: 1 ]\n"},
      {"poisson-jacobi-r2",
       "name = poisson-jacobi-r2\n"
       "chart = x y\n"
       "kind = jacobi\n"
       "bivector = [ x^y: 1 ]\n"
       "vector = [ ]\n"},
  };
  return entries;
}

Scenario catalog_scenario(std::string_view name) {
  for (const CatalogEntry& entry : catalog()) {
    if (entry.name == name) {
      ParseResult parsed = parse_scenario(entry.text);
      if (!parsed.ok) {
        throw DomainError("catalog entry '" + entry.name +
                          "' failed to parse: " + format_diagnostics(parsed.diagnostics));
      }
      return std::move(parsed.scenario);
    }
  }
  throw DomainError("no catalog entry named '" + std::string(name) + "'");
}

}  // namespace e1dirac::tools

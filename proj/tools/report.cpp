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

#include "report.hpp"

#include <cstdint>
#include <vector>

namespace e1dirac::tools {
namespace {

template <Variance V>
Json tensor_json(const AltTensor<V>& a) {
  Json out = Json::object();
  const std::vector<std::string>& names = a.chart().coords();
  std::vector<std::vector<int>> tuples = increasing_tuples(a.chart().dim(), a.degree());
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    const ScalarExpr& c = a.at(static_cast<int>(r));
    if (c.is_zero()) continue;
    std::string key;
    for (std::size_t k = 0; k < tuples[r].size(); ++k) {
      if (k > 0) key += '^';
      key += names[static_cast<std::size_t>(tuples[r][k])];
    }
    out[key] = c.str(names);
  }
  return out;
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[h & 0xF];
    h >>= 4;
  }
  return out;
}

void seal(Json& report) { report["digest"] = fnv1a_hex(report.dump(2)); }

Json form_json(const Form& a) { return tensor_json(a); }

Json multivector_json(const Multivector& m) { return tensor_json(m); }

Json vector_field_json(const VectorField& x) {
  Json out = Json::object();
  const std::vector<std::string>& names = x.chart().coords();
  for (int i = 0; i < x.dim(); ++i) {
    if (x.comp(i).is_zero()) continue;
    out[names[static_cast<std::size_t>(i)]] = x.comp(i).str(names);
  }
  return out;
}

Json scenario_json(const Scenario& scenario) {
  Json j;
  j["name"] = scenario.name;
  j["kind"] = family_kind_name(scenario.kind);
  j["chart"] = scenario.chart.coords();
  Json tensors = Json::object();
  switch (scenario.kind) {
    case FamilyKind::DiracForm:
      tensors["form2"] = form_json(scenario.form2);
      break;
    case FamilyKind::DiracBivector:
      tensors["bivector"] = multivector_json(scenario.bivector);
      break;
    case FamilyKind::Lcp:
      tensors["form2"] = form_json(scenario.form2);
      tensors["form1"] = form_json(scenario.form1);
      break;
    case FamilyKind::Precontact:
      tensors["form1"] = form_json(scenario.form1);
      break;
    case FamilyKind::Jacobi:
    case FamilyKind::HomogeneousPoisson:
      tensors["bivector"] = multivector_json(scenario.bivector);
      tensors["vector"] = vector_field_json(scenario.vector_part);
      break;
  }
  j["tensors"] = tensors;
  return j;
}

}  // namespace e1dirac::tools

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

#ifndef E1DIRAC_TOOLS_REPORT_HPP_
#define E1DIRAC_TOOLS_REPORT_HPP_

#include <string>
#include <string_view>

#include "json.hpp"
#include "scenario.hpp"

namespace e1dirac::tools {

// Reports keep insertion order so equal runs serialize to equal bytes.
using Json = nlohmann::ordered_json;

// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

// Digest of the current serialization, appended under "digest"; call last.
void seal(Json& report);

// Scenario header common to every report.
Json scenario_json(const Scenario& scenario);

// Nonzero components keyed by coordinate tuples such as "x^y", with
// coefficients rendered in coordinate names.
Json form_json(const Form& a);
Json multivector_json(const Multivector& m);
Json vector_field_json(const VectorField& x);

}  // namespace e1dirac::tools

#endif  // E1DIRAC_TOOLS_REPORT_HPP_

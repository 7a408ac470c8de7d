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

#include "e1dirac/chart.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "e1dirac/error.hpp"

namespace e1dirac {

Chart::Chart(std::vector<std::string> coords) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].empty()) throw DomainError("empty coordinate name");
    if (coords[i] == "t") {
      throw DomainError("coordinate name \"t\" is reserved for the time extension");
    }
    for (std::size_t j = i + 1; j < coords.size(); ++j) {
      if (coords[i] == coords[j]) {
        throw DomainError("duplicate coordinate name \"" + coords[i] + "\"");
      }
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(coords));
}

int Chart::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return static_cast<int>(i);
  }
  if (name == "t") return dim();  // frozen time slot on plain charts
  return -1;
}

Chart Chart::time_extended() const {
  if (time_extended_) return *this;
  std::vector<std::string> names = *names_;
  names.push_back("t");
  return Chart(std::make_shared<const std::vector<std::string>>(std::move(names)), true);
}

std::string Chart::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if (i > 0) os << ", ";
    os << (*names_)[i];
  }
  os << ')';
  return os.str();
}

}  // namespace e1dirac

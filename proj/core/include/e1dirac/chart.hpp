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

#ifndef E1DIRAC_CHART_HPP_
#define E1DIRAC_CHART_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace e1dirac {

// A coordinate chart: an ordered list of coordinate names. Variable index i
// in expressions refers to coords()[i]. Index dim() is reserved for the time
// variable "t"; time_extended() turns it into an honest coordinate, which is
// why plain charts reject a coordinate literally named "t".
class Chart {
 public:
  Chart() = default;
  explicit Chart(std::vector<std::string> coords);

  int dim() const { return static_cast<int>(names_->size()); }
  const std::string& coord(int i) const { return (*names_)[i]; }
  const std::vector<std::string>& coords() const { return *names_; }

  // Index of a coordinate name, dim() for "t", -1 if unknown.
  int index_of(std::string_view name) const;

  // Same coordinates with "t" appended as a real coordinate.
  Chart time_extended() const;
  bool is_time_extended() const { return time_extended_; }

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }

  // Short display form, e.g. "(x, y, z)".
  std::string str() const;

 private:
  Chart(std::shared_ptr<const std::vector<std::string>> names, bool extended)
      : names_(std::move(names)), time_extended_(extended) {}

  std::shared_ptr<const std::vector<std::string>> names_ =
      std::make_shared<const std::vector<std::string>>();
  bool time_extended_ = false;
};

}  // namespace e1dirac

#endif  // E1DIRAC_CHART_HPP_

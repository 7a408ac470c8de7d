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

#ifndef E1DIRAC_ERROR_HPP_
#define E1DIRAC_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace e1dirac {

// Buckets map 1:1 onto the CLI exit-code contract: 1 = a requested verdict
// failed, 2 = bad input, 3 = the numerics refused to commit to an answer.
enum class ErrorClass { VerdictFailure = 1, InputError = 2, NumericalRefusal = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& what)
      : std::runtime_error(what), cls_(cls) {}
  ErrorClass error_class() const { return cls_; }

 private:
  ErrorClass cls_;
};

// Evaluation hit a singular point (division by zero, log of a non-positive
// value, variable without a value). The message names the offending
// subexpression.
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorClass::InputError, w) {}
};

// Operands live on different charts.
struct ChartMismatch : Error {
  explicit ChartMismatch(const std::string& w) : Error(ErrorClass::InputError, w) {}
};

// Degree outside the supported range (forms and multivectors are capped at 3).
struct UnsupportedDegree : Error {
  explicit UnsupportedDegree(const std::string& w) : Error(ErrorClass::InputError, w) {}
};

// Expression text failed to parse; `pos` is the byte offset into the text.
struct ExprParseError : Error {
  ExprParseError(std::size_t pos, const std::string& w)
      : Error(ErrorClass::InputError, w), pos(pos) {}
  std::size_t pos;
};

// Singular-value gap too small to call the rank.
struct IllConditioned : Error {
  explicit IllConditioned(const std::string& w) : Error(ErrorClass::NumericalRefusal, w) {}
};

// A linear solve had no solution within tolerance.
struct SingularSystem : Error {
  explicit SingularSystem(const std::string& w) : Error(ErrorClass::NumericalRefusal, w) {}
};

// A pointwise construction needed a rank the data does not have.
struct RankDrop : Error {
  explicit RankDrop(const std::string& w) : Error(ErrorClass::NumericalRefusal, w) {}
};

// Numerical integration could not take a step.
struct StepFailure : Error {
  explicit StepFailure(const std::string& w) : Error(ErrorClass::NumericalRefusal, w) {}
};

// An operation that requires a certified-integrable family was handed one
// whose certification failed.
struct NotIntegrable : Error {
  explicit NotIntegrable(const std::string& w) : Error(ErrorClass::VerdictFailure, w) {}
};

}  // namespace e1dirac

#endif  // E1DIRAC_ERROR_HPP_

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

#ifndef E1DIRAC_EXPR_PARSE_HPP_
#define E1DIRAC_EXPR_PARSE_HPP_

#include <string_view>

#include "e1dirac/chart.hpp"
#include "e1dirac/expr.hpp"

namespace e1dirac {

// Parse infix expression text over the chart's coordinates.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' integer)?
//   base   := number | coord | '(' expr ')' | func '(' expr ')'
//   func   := exp | log | sin | cos
//
// Integer literals become exact rationals; literals with a decimal point or
// exponent become doubles. "t" resolves to the time slot only when
// `allow_time` is set. Throws ExprParseError with the byte offset on bad
// input.
ScalarExpr parse_expr(std::string_view text, const Chart& chart, bool allow_time = false);

}  // namespace e1dirac

#endif  // E1DIRAC_EXPR_PARSE_HPP_

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

#ifndef E1DIRAC_EXPR_HPP_
#define E1DIRAC_EXPR_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace e1dirac {

namespace detail {

// Exact rational with int64 parts. Arithmetic reports overflow instead of
// wrapping; callers degrade to double constants on overflow.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long n, long long d);  // normalizes, d != 0
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_zero() const { return num == 0; }
  bool is_one() const { return num == 1 && den == 1; }

  // Return false on int64 overflow; `out` untouched in that case.
  static bool add(const Rational& a, const Rational& b, Rational* out);
  static bool mul(const Rational& a, const Rational& b, Rational* out);
  static bool div(const Rational& a, const Rational& b, Rational* out);  // b != 0
  static bool pow(const Rational& a, int k, Rational* out);              // a != 0 if k < 0
};

}  // namespace detail

enum class ExprKind {
  Constant,
  Variable,
  Sum,
  Product,
  Quotient,
  Power,
  Exp,
  Log,
  Sin,
  Cos,
  Negate,
};

// Immutable symbolic expression over chart variables. Nodes are shared and
// never mutated, so values can be copied and evaluated concurrently.
// Integer-literal constants stay exact rationals through arithmetic; decimal
// literals are binary doubles.
class ScalarExpr {
 public:
  ScalarExpr();  // the constant 0

  static ScalarExpr rational(long long num, long long den = 1);
  static ScalarExpr number(double v);
  static ScalarExpr variable(int id);
  static ScalarExpr sum(std::vector<ScalarExpr> terms);
  static ScalarExpr product(std::vector<ScalarExpr> factors);

  friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a);

  ScalarExpr pow(int exponent) const;
  friend ScalarExpr exp(const ScalarExpr& a);
  friend ScalarExpr log(const ScalarExpr& a);
  friend ScalarExpr sin(const ScalarExpr& a);
  friend ScalarExpr cos(const ScalarExpr& a);

  // Numeric value at a point; p[i] is the value of variable i. Throws
  // DomainError on singular evaluation, naming the offending subexpression.
  double eval(std::span<const double> p) const;
  double eval(std::initializer_list<double> p) const {
    return eval(std::span<const double>(p.begin(), p.size()));
  }

  // Exact symbolic partial derivative by variable id (lightly simplified).
  ScalarExpr partial(int var) const;

  // Value-preserving cleanup: constant folding, 0/1 elimination, flattening,
  // like-term collection at one level. Never a full canonical form.
  ScalarExpr simplified() const;

  ExprKind kind() const;
  bool is_zero() const;  // structurally the constant 0
  bool is_one() const;
  bool is_constant() const { return kind() == ExprKind::Constant; }

  // Structural comparison; a deterministic total order.
  static int compare(const ScalarExpr& a, const ScalarExpr& b);
  bool equals(const ScalarExpr& other) const { return compare(*this, other) == 0; }

  // Largest variable id referenced, -1 if none.
  int max_variable() const;

  // Infix rendering for diagnostics. The named overload prints variable i as
  // names[i], falling back to the v<i> placeholder past the end of the table.
  std::string str() const;
  std::string str(std::span<const std::string> names) const;

  struct Node;
  const Node& node() const { return *n_; }

 private:
  explicit ScalarExpr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct ScalarExpr::Node {
  ExprKind kind;
  // Constant payload: exact rational unless is_double.
  detail::Rational rat;
  double dval = 0.0;
  bool is_double = false;
  int var = -1;       // Variable payload
  int exponent = 0;   // Power payload
  std::vector<ScalarExpr> kids;
};

}  // namespace e1dirac

#endif  // E1DIRAC_EXPR_HPP_

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

#include "e1dirac/expr.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "e1dirac/error.hpp"

namespace e1dirac {

namespace detail {

namespace {

bool fits64(__int128 v) {
  return v >= static_cast<__int128>(INT64_MIN) && v <= static_cast<__int128>(INT64_MAX);
}

// Normalize n/d with 128-bit intermediates; false if the reduced parts
// overflow int64.
bool normalize(__int128 n, __int128 d, Rational* out) {
  if (d == 0) return false;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n;
  __int128 b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a != 0) {
    n /= a;
    d /= a;
  }
  if (!fits64(n) || !fits64(d)) return false;
  out->num = static_cast<long long>(n);
  out->den = static_cast<long long>(d);
  return true;
}

}  // namespace

Rational Rational::make(long long n, long long d) {
  Rational r;
  if (!normalize(n, d, &r)) {
    // Caller contract: plain literals always fit.
    r.num = n;
    r.den = d;
  }
  return r;
}

bool Rational::add(const Rational& a, const Rational& b, Rational* out) {
  __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
  __int128 d = static_cast<__int128>(a.den) * b.den;
  return normalize(n, d, out);
}

bool Rational::mul(const Rational& a, const Rational& b, Rational* out) {
  __int128 n = static_cast<__int128>(a.num) * b.num;
  __int128 d = static_cast<__int128>(a.den) * b.den;
  return normalize(n, d, out);
}

bool Rational::div(const Rational& a, const Rational& b, Rational* out) {
  if (b.num == 0) return false;
  __int128 n = static_cast<__int128>(a.num) * b.den;
  __int128 d = static_cast<__int128>(a.den) * b.num;
  return normalize(n, d, out);
}

bool Rational::pow(const Rational& a, int k, Rational* out) {
  Rational base = a;
  if (k < 0) {
    if (a.num == 0) return false;
    base = Rational{a.den, a.num};
    if (base.den < 0) {
      base.num = -base.num;
      base.den = -base.den;
    }
    k = -k;
  }
  Rational acc{1, 1};
  while (k > 0) {
    if (k & 1) {
      if (!mul(acc, base, &acc)) return false;
    }
    k >>= 1;
    if (k > 0 && !mul(base, base, &base)) return false;
  }
  *out = acc;
  return true;
}

}  // namespace detail

using detail::Rational;
using Node = ScalarExpr::Node;

namespace {

std::shared_ptr<const Node> make_node(Node n) {
  return std::make_shared<const Node>(std::move(n));
}

Node constant_node(Rational r) {
  Node n;
  n.kind = ExprKind::Constant;
  n.rat = r;
  return n;
}

Node double_node(double v) {
  Node n;
  n.kind = ExprKind::Constant;
  n.is_double = true;
  n.dval = v;
  return n;
}

Node unary_node(ExprKind k, ScalarExpr kid) {
  Node n;
  n.kind = k;
  n.kids.push_back(std::move(kid));
  return n;
}

bool constant_value(const Node& n, double* out) {
  if (n.kind != ExprKind::Constant) return false;
  *out = n.is_double ? n.dval : n.rat.value();
  return true;
}

double pow_by_squaring(double base, int k, const ScalarExpr& context) {
  if (k < 0) {
    if (base == 0.0) {
      throw DomainError("zero base with negative exponent in " + context.str());
    }
    return 1.0 / pow_by_squaring(base, -k, context);
  }
  double acc = 1.0;
  double b = base;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

}  // namespace

ScalarExpr::ScalarExpr() : n_(make_node(constant_node(Rational{0, 1}))) {}

ScalarExpr ScalarExpr::rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational constant with zero denominator");
  return ScalarExpr(make_node(constant_node(Rational::make(num, den))));
}

ScalarExpr ScalarExpr::number(double v) { return ScalarExpr(make_node(double_node(v))); }

ScalarExpr ScalarExpr::variable(int id) {
  if (id < 0) throw DomainError("negative variable id");
  Node n;
  n.kind = ExprKind::Variable;
  n.var = id;
  return ScalarExpr(make_node(std::move(n)));
}

ScalarExpr ScalarExpr::sum(std::vector<ScalarExpr> terms) {
  if (terms.empty()) return ScalarExpr();
  if (terms.size() == 1) return terms[0];
  Node n;
  n.kind = ExprKind::Sum;
  n.kids = std::move(terms);
  return ScalarExpr(make_node(std::move(n)));
}

ScalarExpr ScalarExpr::product(std::vector<ScalarExpr> factors) {
  if (factors.empty()) return rational(1);
  if (factors.size() == 1) return factors[0];
  Node n;
  n.kind = ExprKind::Product;
  n.kids = std::move(factors);
  return ScalarExpr(make_node(std::move(n)));
}

ExprKind ScalarExpr::kind() const { return n_->kind; }

bool ScalarExpr::is_zero() const {
  return n_->kind == ExprKind::Constant &&
         (n_->is_double ? n_->dval == 0.0 : n_->rat.is_zero());
}

bool ScalarExpr::is_one() const {
  return n_->kind == ExprKind::Constant &&
         (n_->is_double ? n_->dval == 1.0 : n_->rat.is_one());
}

// Cheap peephole folding keeps intermediates small without a simplify pass.
ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Node& na = a.node();
  const Node& nb = b.node();
  if (na.kind == ExprKind::Constant && nb.kind == ExprKind::Constant) {
    if (!na.is_double && !nb.is_double) {
      Rational r;
      if (Rational::add(na.rat, nb.rat, &r)) return ScalarExpr::rational(r.num, r.den);
    }
    double x, y;
    constant_value(na, &x);
    constant_value(nb, &y);
    return ScalarExpr::number(x + y);
  }
  return ScalarExpr::sum({a, b});
}

ScalarExpr operator-(const ScalarExpr& a) {
  if (a.is_zero()) return a;
  const Node& n = a.node();
  if (n.kind == ExprKind::Constant) {
    if (!n.is_double) return ScalarExpr::rational(-n.rat.num, n.rat.den);
    return ScalarExpr::number(-n.dval);
  }
  return ScalarExpr(make_node(unary_node(ExprKind::Negate, a)));
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) { return a + (-b); }

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.is_zero() || b.is_zero()) return ScalarExpr();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  const Node& na = a.node();
  const Node& nb = b.node();
  if (na.kind == ExprKind::Constant && nb.kind == ExprKind::Constant) {
    if (!na.is_double && !nb.is_double) {
      Rational r;
      if (Rational::mul(na.rat, nb.rat, &r)) return ScalarExpr::rational(r.num, r.den);
    }
    double x, y;
    constant_value(na, &x);
    constant_value(nb, &y);
    return ScalarExpr::number(x * y);
  }
  return ScalarExpr::product({a, b});
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
  if (b.is_one()) return a;
  if (a.is_zero() && !b.is_zero()) return a;
  const Node& na = a.node();
  const Node& nb = b.node();
  if (na.kind == ExprKind::Constant && nb.kind == ExprKind::Constant && !nb.is_double &&
      !na.is_double && !nb.rat.is_zero()) {
    Rational r;
    if (Rational::div(na.rat, nb.rat, &r)) return ScalarExpr::rational(r.num, r.den);
  }
  Node n;
  n.kind = ExprKind::Quotient;
  n.kids = {a, b};
  return ScalarExpr(make_node(std::move(n)));
}

ScalarExpr ScalarExpr::pow(int exponent) const {
  if (exponent == 0) return rational(1);
  if (exponent == 1) return *this;
  const Node& base = node();
  if (base.kind == ExprKind::Constant && !base.is_double) {
    Rational r;
    if (Rational::pow(base.rat, exponent, &r)) return rational(r.num, r.den);
  }
  Node n;
  n.kind = ExprKind::Power;
  n.exponent = exponent;
  n.kids = {*this};
  return ScalarExpr(make_node(std::move(n)));
}

ScalarExpr exp(const ScalarExpr& a) {
  if (a.is_zero()) return ScalarExpr::rational(1);
  return ScalarExpr(make_node(unary_node(ExprKind::Exp, a)));
}

ScalarExpr log(const ScalarExpr& a) {
  if (a.is_one()) return ScalarExpr();
  return ScalarExpr(make_node(unary_node(ExprKind::Log, a)));
}

ScalarExpr sin(const ScalarExpr& a) {
  if (a.is_zero()) return ScalarExpr();
  return ScalarExpr(make_node(unary_node(ExprKind::Sin, a)));
}

ScalarExpr cos(const ScalarExpr& a) {
  if (a.is_zero()) return ScalarExpr::rational(1);
  return ScalarExpr(make_node(unary_node(ExprKind::Cos, a)));
}

double ScalarExpr::eval(std::span<const double> p) const {
  const Node& n = *n_;
  switch (n.kind) {
    case ExprKind::Constant:
      return n.is_double ? n.dval : n.rat.value();
    case ExprKind::Variable:
      if (n.var >= static_cast<int>(p.size())) {
        throw DomainError("no value supplied for variable in " + str());
      }
      return p[n.var];
    case ExprKind::Sum: {
      double acc = 0.0;
      for (const ScalarExpr& k : n.kids) acc += k.eval(p);
      return acc;
    }
    case ExprKind::Product: {
      double acc = 1.0;
      for (const ScalarExpr& k : n.kids) acc *= k.eval(p);
      return acc;
    }
    case ExprKind::Quotient: {
      double den = n.kids[1].eval(p);
      if (den == 0.0) throw DomainError("division by zero in " + str());
      return n.kids[0].eval(p) / den;
    }
    case ExprKind::Power:
      return pow_by_squaring(n.kids[0].eval(p), n.exponent, *this);
    case ExprKind::Exp:
      return std::exp(n.kids[0].eval(p));
    case ExprKind::Log: {
      double v = n.kids[0].eval(p);
      if (v <= 0.0) throw DomainError("log of non-positive value in " + str());
      return std::log(v);
    }
    case ExprKind::Sin:
      return std::sin(n.kids[0].eval(p));
    case ExprKind::Cos:
      return std::cos(n.kids[0].eval(p));
    case ExprKind::Negate:
      return -n.kids[0].eval(p);
  }
  throw DomainError("corrupt expression node");
}

ScalarExpr ScalarExpr::partial(int var) const {
  const Node& n = *n_;
  ScalarExpr out;
  switch (n.kind) {
    case ExprKind::Constant:
      return ScalarExpr();
    case ExprKind::Variable:
      return n.var == var ? rational(1) : ScalarExpr();
    case ExprKind::Sum: {
      std::vector<ScalarExpr> parts;
      parts.reserve(n.kids.size());
      for (const ScalarExpr& k : n.kids) parts.push_back(k.partial(var));
      out = sum(std::move(parts));
      break;
    }
    case ExprKind::Product: {
      std::vector<ScalarExpr> parts;
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        std::vector<ScalarExpr> factors;
        factors.reserve(n.kids.size());
        for (std::size_t j = 0; j < n.kids.size(); ++j) {
          factors.push_back(j == i ? n.kids[j].partial(var) : n.kids[j]);
        }
        parts.push_back(product(std::move(factors)));
      }
      out = sum(std::move(parts));
      break;
    }
    case ExprKind::Quotient: {
      const ScalarExpr& a = n.kids[0];
      const ScalarExpr& b = n.kids[1];
      out = (a.partial(var) * b - a * b.partial(var)) / b.pow(2);
      break;
    }
    case ExprKind::Power: {
      const ScalarExpr& b = n.kids[0];
      out = rational(n.exponent) * b.pow(n.exponent - 1) * b.partial(var);
      break;
    }
    case ExprKind::Exp:
      out = *this * n.kids[0].partial(var);
      break;
    case ExprKind::Log:
      out = n.kids[0].partial(var) / n.kids[0];
      break;
    case ExprKind::Sin:
      out = cos(n.kids[0]) * n.kids[0].partial(var);
      break;
    case ExprKind::Cos:
      out = -(sin(n.kids[0]) * n.kids[0].partial(var));
      break;
    case ExprKind::Negate:
      out = -n.kids[0].partial(var);
      break;
  }
  return out.simplified();
}

int ScalarExpr::max_variable() const {
  const Node& n = *n_;
  if (n.kind == ExprKind::Variable) return n.var;
  int m = -1;
  for (const ScalarExpr& k : n.kids) m = std::max(m, k.max_variable());
  return m;
}

int ScalarExpr::compare(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.n_ == b.n_) return 0;
  const Node& x = *a.n_;
  const Node& y = *b.n_;
  if (x.kind != y.kind) return x.kind < y.kind ? -1 : 1;
  switch (x.kind) {
    case ExprKind::Constant: {
      if (x.is_double != y.is_double) return x.is_double ? 1 : -1;
      if (!x.is_double) {
        __int128 l = static_cast<__int128>(x.rat.num) * y.rat.den;
        __int128 r = static_cast<__int128>(y.rat.num) * x.rat.den;
        if (l != r) return l < r ? -1 : 1;
        return 0;
      }
      if (x.dval != y.dval) return x.dval < y.dval ? -1 : 1;
      return 0;
    }
    case ExprKind::Variable:
      if (x.var != y.var) return x.var < y.var ? -1 : 1;
      return 0;
    case ExprKind::Power:
      if (x.exponent != y.exponent) return x.exponent < y.exponent ? -1 : 1;
      break;
    default:
      break;
  }
  if (x.kids.size() != y.kids.size()) return x.kids.size() < y.kids.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.kids.size(); ++i) {
    int c = compare(x.kids[i], y.kids[i]);
    if (c != 0) return c;
  }
  return 0;
}

namespace {

struct ExprLess {
  bool operator()(const ScalarExpr& a, const ScalarExpr& b) const {
    return ScalarExpr::compare(a, b) < 0;
  }
};

// Constant accumulator that stays rational while it can.
struct ConstAcc {
  Rational rat{0, 1};
  double dbl = 0.0;
  bool use_double = false;

  void init_mul() { rat = Rational{1, 1}; }

  void add(const Node& c) {
    if (use_double || c.is_double) {
      to_double();
      dbl += c.is_double ? c.dval : c.rat.value();
      return;
    }
    Rational r;
    if (Rational::add(rat, c.rat, &r)) {
      rat = r;
    } else {
      to_double();
      dbl += c.rat.value();
    }
  }

  void mul(const Node& c) {
    if (use_double || c.is_double) {
      to_double();
      dbl *= c.is_double ? c.dval : c.rat.value();
      return;
    }
    Rational r;
    if (Rational::mul(rat, c.rat, &r)) {
      rat = r;
    } else {
      to_double();
      dbl *= c.rat.value();
    }
  }

  void to_double() {
    if (!use_double) {
      dbl = rat.value();
      use_double = true;
    }
  }

  bool is_zero() const { return use_double ? dbl == 0.0 : rat.is_zero(); }
  bool is_one() const { return use_double ? dbl == 1.0 : rat.is_one(); }

  ScalarExpr expr() const {
    return use_double ? ScalarExpr::number(dbl) : ScalarExpr::rational(rat.num, rat.den);
  }
};

ScalarExpr simplify_node(const ScalarExpr& e);
ScalarExpr simplify_product(const std::vector<ScalarExpr>& kids_in);

// Flat product of a constant and an already-simplified core.
ScalarExpr mul_flat(const ScalarExpr& coeff, const ScalarExpr& core) {
  if (coeff.is_one()) return core;
  if (core.is_one()) return coeff;
  std::vector<ScalarExpr> factors{coeff};
  if (core.kind() == ExprKind::Product) {
    for (const ScalarExpr& k : core.node().kids) factors.push_back(k);
  } else {
    factors.push_back(core);
  }
  return ScalarExpr::product(std::move(factors));
}

// Split a simplified term into (constant coefficient, residual factor).
std::pair<ScalarExpr, ScalarExpr> split_coefficient(const ScalarExpr& term) {
  const Node& n = term.node();
  if (n.kind == ExprKind::Product) {
    ConstAcc acc;
    acc.init_mul();
    std::vector<ScalarExpr> rest;
    for (const ScalarExpr& k : n.kids) {
      if (k.is_constant()) {
        acc.mul(k.node());
      } else {
        rest.push_back(k);
      }
    }
    if (rest.empty()) return {acc.expr(), ScalarExpr::rational(1)};
    return {acc.expr(), ScalarExpr::product(std::move(rest))};
  }
  if (n.kind == ExprKind::Constant) return {term, ScalarExpr::rational(1)};
  return {ScalarExpr::rational(1), term};
}

ScalarExpr simplify_sum(const std::vector<ScalarExpr>& kids_in) {
  // Flatten, fold constants, then collect like terms at this level.
  std::vector<ScalarExpr> flat;
  for (const ScalarExpr& kid : kids_in) {
    ScalarExpr k = simplify_node(kid);
    if (k.kind() == ExprKind::Sum) {
      for (const ScalarExpr& g : k.node().kids) flat.push_back(g);
    } else if (!k.is_zero()) {
      flat.push_back(k);
    }
  }
  ConstAcc consts;
  std::map<ScalarExpr, ConstAcc, ExprLess> terms;
  std::vector<ScalarExpr> order;  // first-seen core order, then sorted below
  for (const ScalarExpr& k : flat) {
    if (k.is_constant()) {
      consts.add(k.node());
      continue;
    }
    auto [coeff, core] = split_coefficient(k);
    auto it = terms.find(core);
    if (it == terms.end()) {
      ConstAcc acc;
      acc.add(coeff.node());
      terms.emplace(core, acc);
      order.push_back(core);
    } else {
      it->second.add(coeff.node());
    }
  }
  std::sort(order.begin(), order.end(),
            [](const ScalarExpr& a, const ScalarExpr& b) { return ScalarExpr::compare(a, b) < 0; });
  std::vector<ScalarExpr> out;
  for (const ScalarExpr& core : order) {
    const ConstAcc& acc = terms.at(core);
    if (acc.is_zero()) continue;
    out.push_back(mul_flat(acc.expr(), core));
  }
  if (!consts.is_zero()) out.push_back(consts.expr());
  if (out.empty()) return ScalarExpr();
  if (out.size() == 1) return out[0];
  return ScalarExpr::sum(std::move(out));
}

ScalarExpr simplify_product(const std::vector<ScalarExpr>& kids_in) {
  std::vector<ScalarExpr> flat;
  for (const ScalarExpr& kid : kids_in) {
    ScalarExpr k = simplify_node(kid);
    if (k.kind() == ExprKind::Product) {
      for (const ScalarExpr& g : k.node().kids) flat.push_back(g);
    } else {
      flat.push_back(k);
    }
  }
  ConstAcc consts;
  consts.init_mul();
  // Merge structurally equal bases into integer powers.
  std::map<ScalarExpr, int, ExprLess> powers;
  std::vector<ScalarExpr> order;
  for (const ScalarExpr& k : flat) {
    if (k.is_constant()) {
      if (k.is_zero()) return ScalarExpr();
      consts.mul(k.node());
      continue;
    }
    ScalarExpr base = k;
    int exponent = 1;
    if (k.kind() == ExprKind::Power) {
      base = k.node().kids[0];
      exponent = k.node().exponent;
    }
    auto it = powers.find(base);
    if (it == powers.end()) {
      powers.emplace(base, exponent);
      order.push_back(base);
    } else {
      it->second += exponent;
    }
  }
  std::sort(order.begin(), order.end(),
            [](const ScalarExpr& a, const ScalarExpr& b) { return ScalarExpr::compare(a, b) < 0; });
  std::vector<ScalarExpr> out;
  for (const ScalarExpr& base : order) {
    int k = powers.at(base);
    if (k == 0) continue;
    out.push_back(k == 1 ? base : base.pow(k));
  }
  // A constant times a single sum distributes, so that differences of sums
  // cancel term by term.
  if (out.size() == 1 && out[0].kind() == ExprKind::Sum && !consts.is_one()) {
    std::vector<ScalarExpr> terms;
    terms.reserve(out[0].node().kids.size());
    for (const ScalarExpr& t : out[0].node().kids) {
      terms.push_back(simplify_product({consts.expr(), t}));
    }
    return simplify_sum(terms);
  }
  if (!consts.is_one()) out.insert(out.begin(), consts.expr());
  if (out.empty()) return ScalarExpr::rational(1);
  if (out.size() == 1) return out[0];
  return ScalarExpr::product(std::move(out));
}

ScalarExpr simplify_node(const ScalarExpr& e) {
  const Node& n = e.node();
  switch (n.kind) {
    case ExprKind::Constant:
    case ExprKind::Variable:
      return e;
    case ExprKind::Negate:
      return simplify_product({ScalarExpr::rational(-1), n.kids[0]});
    case ExprKind::Sum:
      return simplify_sum(n.kids);
    case ExprKind::Product:
      return simplify_product(n.kids);
    case ExprKind::Quotient: {
      ScalarExpr a = simplify_node(n.kids[0]);
      ScalarExpr b = simplify_node(n.kids[1]);
      if (b.is_one()) return a;
      if (a.is_zero() && !b.is_zero()) return a;
      if (b.is_constant()) {
        // Fold 1/c into the numerator.
        const Node& bn = b.node();
        if (!bn.is_double && !bn.rat.is_zero()) {
          return simplify_product({ScalarExpr::rational(bn.rat.den, bn.rat.num), a});
        }
        if (bn.is_double && bn.dval != 0.0) {
          return simplify_product({ScalarExpr::number(1.0 / bn.dval), a});
        }
      }
      if (a.equals(b)) return ScalarExpr::rational(1);
      return a / b;
    }
    case ExprKind::Power: {
      ScalarExpr b = simplify_node(n.kids[0]);
      if (b.kind() == ExprKind::Power) {
        return b.node().kids[0].pow(b.node().exponent * n.exponent);
      }
      return b.pow(n.exponent);
    }
    case ExprKind::Exp:
      return exp(simplify_node(n.kids[0]));
    case ExprKind::Log:
      return log(simplify_node(n.kids[0]));
    case ExprKind::Sin:
      return sin(simplify_node(n.kids[0]));
    case ExprKind::Cos:
      return cos(simplify_node(n.kids[0]));
  }
  return e;
}

}  // namespace

ScalarExpr ScalarExpr::simplified() const { return simplify_node(*this); }

namespace {

void render(const ScalarExpr& e, std::ostream& os, int parent_prec,
            std::span<const std::string> names);

// Precedence: sum 1, product 2, quotient 2, negate 2.5-ish, power 3, atom 4.
int precedence(const Node& n) {
  switch (n.kind) {
    case ExprKind::Sum:
      return 1;
    case ExprKind::Product:
    case ExprKind::Quotient:
      return 2;
    case ExprKind::Negate:
      return 2;
    case ExprKind::Power:
      return 3;
    default:
      return 4;
  }
}

void render(const ScalarExpr& e, std::ostream& os, int parent_prec,
            std::span<const std::string> names) {
  const Node& n = e.node();
  int prec = precedence(n);
  bool paren = prec < parent_prec;
  if (n.kind == ExprKind::Constant) {
    if (n.is_double) {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n.dval;
      std::string s = tmp.str();
      if (s.front() == '-' && parent_prec > 1) {
        os << '(' << s << ')';
      } else {
        os << s;
      }
      return;
    }
    bool neg = n.rat.num < 0;
    bool frac = n.rat.den != 1;
    if ((neg || frac) && parent_prec > 1) {
      os << '(' << n.rat.num;
      if (frac) os << '/' << n.rat.den;
      os << ')';
    } else {
      os << n.rat.num;
      if (frac) os << '/' << n.rat.den;
    }
    return;
  }
  if (paren) os << '(';
  switch (n.kind) {
    case ExprKind::Variable:
      if (static_cast<std::size_t>(n.var) < names.size()) {
        os << names[static_cast<std::size_t>(n.var)];
      } else {
        os << 'v' << n.var;
      }
      break;
    case ExprKind::Sum:
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        std::ostringstream term;
        render(n.kids[i], term, prec, names);
        std::string s = term.str();
        // Fold a leading sign into the join, "a - b" instead of "a + -b".
        if (i > 0 && !s.empty() && s.front() == '-') {
          os << " - " << std::string_view(s).substr(1);
        } else {
          if (i > 0) os << " + ";
          os << s;
        }
      }
      break;
    case ExprKind::Product: {
      // A leading negative rational prints as a sign, "-2*x" not "(-2)*x".
      std::size_t start = 0;
      const Node& k0 = n.kids[0].node();
      if (n.kids.size() >= 2 && k0.kind == ExprKind::Constant && !k0.is_double &&
          k0.rat.num < 0) {
        os << '-';
        if (k0.rat.num != -1 || k0.rat.den != 1) {
          os << -k0.rat.num;
          if (k0.rat.den != 1) os << '/' << k0.rat.den;
          os << '*';
        }
        start = 1;
      }
      for (std::size_t i = start; i < n.kids.size(); ++i) {
        if (i > start) os << '*';
        render(n.kids[i], os, prec + 1, names);
      }
      break;
    }
    case ExprKind::Quotient:
      render(n.kids[0], os, prec + 1, names);
      os << '/';
      render(n.kids[1], os, prec + 1, names);
      break;
    case ExprKind::Power:
      render(n.kids[0], os, prec + 1, names);
      os << '^' << n.exponent;
      break;
    case ExprKind::Exp:
      os << "exp(";
      render(n.kids[0], os, 0, names);
      os << ')';
      break;
    case ExprKind::Log:
      os << "log(";
      render(n.kids[0], os, 0, names);
      os << ')';
      break;
    case ExprKind::Sin:
      os << "sin(";
      render(n.kids[0], os, 0, names);
      os << ')';
      break;
    case ExprKind::Cos:
      os << "cos(";
      render(n.kids[0], os, 0, names);
      os << ')';
      break;
    case ExprKind::Negate:
      os << '-';
      render(n.kids[0], os, prec + 1, names);
      break;
    default:
      break;
  }
  if (paren) os << ')';
}

}  // namespace

std::string ScalarExpr::str() const { return str({}); }

std::string ScalarExpr::str(std::span<const std::string> names) const {
  std::ostringstream os;
  render(*this, os, 0, names);
  return os.str();
}

}  // namespace e1dirac

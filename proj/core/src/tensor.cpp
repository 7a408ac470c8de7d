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

#include "e1dirac/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace e1dirac {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<std::vector<int>> increasing_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  for (;;) {
    out.push_back(t);
    // Advance the rightmost entry that still has room.
    int i = k - 1;
    while (i >= 0 && t[i] == n - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

int tuple_rank(int n, std::span<const int> tuple) {
  int k = static_cast<int>(tuple.size());
  long long rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < tuple[i]; ++v) rank += binom(n - 1 - v, k - 1 - i);
    prev = tuple[i];
  }
  return static_cast<int>(rank);
}

int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  // Insertion sort; each swap of neighbors flips the sign.
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (idx[i] == idx[i - 1]) return 0;
  }
  return sign;
}

namespace {

template <Variance V>
std::string basis_label(const Chart& chart, const std::vector<int>& tuple) {
  std::ostringstream os;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) os << '^';
    if constexpr (V == Variance::Covariant) {
      os << 'd' << chart.coord(tuple[i]);
    } else {
      os << "d/d" << chart.coord(tuple[i]);
    }
  }
  return os.str();
}

template <Variance V>
std::string tensor_str(const AltTensor<V>& a) {
  std::vector<std::vector<int>> tuples = increasing_tuples(a.chart().dim(), a.degree());
  std::ostringstream os;
  bool any = false;
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    ScalarExpr c = a.at(static_cast<int>(r)).simplified();
    if (c.is_zero()) continue;
    if (any) os << " + ";
    any = true;
    if (a.degree() == 0) {
      os << c.str();
    } else {
      os << '(' << c.str() << ") " << basis_label<V>(a.chart(), tuples[r]);
    }
  }
  return any ? os.str() : "0";
}

void check_chart(const Chart& a, const Chart& b) {
  if (a != b) {
    throw ChartMismatch("operands live on different charts: " + a.str() + " vs " + b.str());
  }
}

}  // namespace

template <>
std::string AltTensor<Variance::Covariant>::str() const {
  return tensor_str(*this);
}

template <>
std::string AltTensor<Variance::Contravariant>::str() const {
  return tensor_str(*this);
}

VectorField VectorField::simplified() const {
  VectorField out(chart_);
  for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = comps_[i].simplified();
  return out;
}

VectorField VectorField::partial(int var) const {
  VectorField out(chart_);
  for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = comps_[i].partial(var);
  return out;
}

std::string VectorField::str() const { return as_multivector(*this).str(); }

VectorField operator+(const VectorField& a, const VectorField& b) {
  check_chart(a.chart_, b.chart_);
  VectorField out(a.chart_);
  for (std::size_t i = 0; i < out.comps_.size(); ++i) out.comps_[i] = a.comps_[i] + b.comps_[i];
  return out;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  check_chart(a.chart_, b.chart_);
  VectorField out(a.chart_);
  for (std::size_t i = 0; i < out.comps_.size(); ++i) out.comps_[i] = a.comps_[i] - b.comps_[i];
  return out;
}

VectorField operator-(const VectorField& a) {
  VectorField out(a.chart_);
  for (std::size_t i = 0; i < out.comps_.size(); ++i) out.comps_[i] = -a.comps_[i];
  return out;
}

VectorField operator*(const ScalarExpr& f, const VectorField& a) {
  VectorField out(a.chart_);
  for (std::size_t i = 0; i < out.comps_.size(); ++i) out.comps_[i] = f * a.comps_[i];
  return out;
}

ScalarExpr apply(const VectorField& x, const ScalarExpr& f) {
  ScalarExpr acc;
  for (int i = 0; i < x.dim(); ++i) acc = acc + x.comp(i) * f.partial(i);
  return acc;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  check_chart(x.chart(), y.chart());
  VectorField out(x.chart());
  for (int i = 0; i < x.dim(); ++i) out.comp(i) = apply(x, y.comp(i)) - apply(y, x.comp(i));
  return out;
}

Form differential(const Chart& chart, const ScalarExpr& f) {
  Form out(chart, 1);
  for (int i = 0; i < chart.dim(); ++i) out.at(i) = f.partial(i);
  return out;
}

Form exterior_d(const Form& a) {
  const int n = a.chart().dim();
  const int k = a.degree();
  if (k > 2) throw UnsupportedDegree("exterior differential of a degree-3 form");
  Form out(a.chart(), k + 1);
  std::vector<std::vector<int>> tuples = increasing_tuples(n, k + 1);
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    // Alternating sum of coordinate derivatives with one index removed.
    ScalarExpr acc;
    for (int drop = 0; drop <= k; ++drop) {
      std::vector<int> rest;
      rest.reserve(k);
      for (int i = 0; i <= k; ++i) {
        if (i != drop) rest.push_back(tuples[r][i]);
      }
      ScalarExpr term = a.component(std::move(rest)).partial(tuples[r][drop]);
      acc = (drop % 2 == 0) ? acc + term : acc - term;
    }
    out.at(static_cast<int>(r)) = acc;
  }
  return out;
}

Form interior(const VectorField& x, const Form& a) {
  check_chart(x.chart(), a.chart());
  const int n = a.chart().dim();
  const int k = a.degree();
  if (k < 1) throw UnsupportedDegree("interior product needs a form of degree at least 1");
  Form out(a.chart(), k - 1);
  std::vector<std::vector<int>> tuples = increasing_tuples(n, k - 1);
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    ScalarExpr acc;
    for (int i = 0; i < n; ++i) {
      std::vector<int> idx;
      idx.reserve(k);
      idx.push_back(i);
      idx.insert(idx.end(), tuples[r].begin(), tuples[r].end());
      acc = acc + x.comp(i) * a.component(std::move(idx));
    }
    out.at(static_cast<int>(r)) = acc;
  }
  return out;
}

Form lie_derivative(const VectorField& x, const Form& a) {
  check_chart(x.chart(), a.chart());
  if (a.degree() == 0) return Form(a.chart(), 0, {apply(x, a.at(0))});
  if (a.degree() > 2) throw UnsupportedDegree("Lie derivative of a degree-3 form");
  return interior(x, exterior_d(a)) + exterior_d(interior(x, a));
}

namespace {

template <Variance V>
AltTensor<V> wedge_impl(const AltTensor<V>& a, const AltTensor<V>& b) {
  check_chart(a.chart(), b.chart());
  const int n = a.chart().dim();
  AltTensor<V> out(a.chart(), a.degree() + b.degree());
  std::vector<std::vector<int>> lhs = increasing_tuples(n, a.degree());
  std::vector<std::vector<int>> rhs = increasing_tuples(n, b.degree());
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (a.at(static_cast<int>(i)).is_zero()) continue;
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      if (b.at(static_cast<int>(j)).is_zero()) continue;
      std::vector<int> idx = lhs[i];
      idx.insert(idx.end(), rhs[j].begin(), rhs[j].end());
      out.add_term(std::move(idx), a.at(static_cast<int>(i)) * b.at(static_cast<int>(j)));
    }
  }
  return out;
}

}  // namespace

Form wedge(const Form& a, const Form& b) { return wedge_impl(a, b); }
Multivector wedge(const Multivector& a, const Multivector& b) { return wedge_impl(a, b); }

namespace {

// Lie derivative of a bivector along a vector field, in components.
Multivector lie_derivative_bivector(const VectorField& x, const Multivector& q) {
  const int n = q.chart().dim();
  Multivector out(q.chart(), 2);
  std::vector<std::vector<int>> tuples = increasing_tuples(n, 2);
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    const int i = tuples[r][0];
    const int j = tuples[r][1];
    ScalarExpr acc = apply(x, q.component({i, j}));
    for (int l = 0; l < n; ++l) {
      acc = acc - q.component({l, j}) * x.comp(i).partial(l);
      acc = acc - q.component({i, l}) * x.comp(j).partial(l);
    }
    out.at(static_cast<int>(r)) = acc;
  }
  return out;
}

// Bracket of two bivectors, graded for the Poisson/Jacobi conventions used
// throughout: schouten(B, B) = 0 characterizes Poisson bivectors.
Multivector schouten22(const Multivector& a, const Multivector& b) {
  const int n = a.chart().dim();
  Multivector out(a.chart(), 3);
  std::vector<std::vector<int>> tuples = increasing_tuples(n, 3);
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    ScalarExpr acc;
    const std::vector<int>& t = tuples[r];
    for (int c = 0; c < 3; ++c) {
      const int i = t[c % 3];
      const int j = t[(c + 1) % 3];
      const int k = t[(c + 2) % 3];
      for (int l = 0; l < n; ++l) {
        acc = acc + a.component({l, i}) * b.component({j, k}).partial(l);
        acc = acc + b.component({l, i}) * a.component({j, k}).partial(l);
      }
    }
    out.at(static_cast<int>(r)) = acc;
  }
  return out;
}

}  // namespace

Multivector schouten(const Multivector& a, const Multivector& b) {
  check_chart(a.chart(), b.chart());
  const int p = a.degree();
  const int q = b.degree();
  if (p == 1 && q == 1) {
    return as_multivector(lie_bracket(as_vector_field(a), as_vector_field(b)));
  }
  if (p == 1 && q == 2) return lie_derivative_bivector(as_vector_field(a), b);
  if (p == 2 && q == 1) return -lie_derivative_bivector(as_vector_field(b), a);
  if (p == 2 && q == 2) return schouten22(a, b);
  throw UnsupportedDegree("Schouten bracket supports degrees 1 and 2 only");
}

VectorField sharp(const Multivector& lambda, const Form& alpha) {
  check_chart(lambda.chart(), alpha.chart());
  if (lambda.degree() != 2 || alpha.degree() != 1) {
    throw UnsupportedDegree("sharp needs a bivector and a 1-form");
  }
  const int n = lambda.chart().dim();
  VectorField out(lambda.chart());
  for (int j = 0; j < n; ++j) {
    ScalarExpr acc;
    for (int i = 0; i < n; ++i) acc = acc + lambda.component({i, j}) * alpha.at(i);
    out.comp(j) = acc;
  }
  return out;
}

ScalarExpr contract2(const Multivector& lambda, const Form& a, const Form& b) {
  check_chart(lambda.chart(), a.chart());
  check_chart(lambda.chart(), b.chart());
  if (lambda.degree() != 2 || a.degree() != 1 || b.degree() != 1) {
    throw UnsupportedDegree("contract2 needs a bivector and two 1-forms");
  }
  const int n = lambda.chart().dim();
  ScalarExpr acc;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      acc = acc + lambda.component({i, j}) * (a.at(i) * b.at(j) - a.at(j) * b.at(i));
    }
  }
  return acc;
}

ScalarExpr contract2(const Form& omega, const VectorField& x, const VectorField& y) {
  check_chart(omega.chart(), x.chart());
  check_chart(omega.chart(), y.chart());
  if (omega.degree() != 2) throw UnsupportedDegree("contract2 needs a 2-form");
  const int n = omega.chart().dim();
  ScalarExpr acc;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      acc = acc + omega.component({i, j}) * (x.comp(i) * y.comp(j) - x.comp(j) * y.comp(i));
    }
  }
  return acc;
}

ScalarExpr pair(const Form& alpha, const VectorField& x) {
  check_chart(alpha.chart(), x.chart());
  if (alpha.degree() != 1) throw UnsupportedDegree("pair needs a 1-form");
  ScalarExpr acc;
  for (int i = 0; i < x.dim(); ++i) acc = acc + alpha.at(i) * x.comp(i);
  return acc;
}

Multivector as_multivector(const VectorField& x) {
  return Multivector(x.chart(), 1, x.comps());
}

VectorField as_vector_field(const Multivector& m) {
  if (m.degree() != 1) throw UnsupportedDegree("vector field conversion needs degree 1");
  return VectorField(m.chart(), m.coeffs());
}

}  // namespace e1dirac

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

#ifndef E1DIRAC_TENSOR_HPP_
#define E1DIRAC_TENSOR_HPP_

#include <span>
#include <string>
#include <vector>

#include "e1dirac/chart.hpp"
#include "e1dirac/error.hpp"
#include "e1dirac/expr.hpp"

namespace e1dirac {

// Binomial coefficient for the small arguments used here.
long long binom(int n, int k);

// Strictly increasing k-tuples over {0..n-1} in lexicographic order. This
// order fixes the flat coefficient layout of every antisymmetric tensor.
std::vector<std::vector<int>> increasing_tuples(int n, int k);

// Rank of a strictly increasing tuple in that order.
int tuple_rank(int n, std::span<const int> tuple);

// Sort `idx` ascending in place; returns the permutation sign, or 0 if two
// entries repeat.
int sort_sign(std::vector<int>& idx);

enum class Variance { Covariant, Contravariant };

// Antisymmetric tensor field of degree 0..3 on a chart, with symbolic
// coefficients stored on increasing index tuples in lexicographic order.
// Covariant instances are differential forms, contravariant ones are
// multivector fields; both share this coefficient calculus.
template <Variance V>
class AltTensor {
 public:
  AltTensor() : coeffs_(1) {}

  AltTensor(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
    check_degree(degree_, chart_.dim());
    coeffs_.resize(static_cast<std::size_t>(binom(chart_.dim(), degree_)));
  }

  AltTensor(Chart chart, int degree, std::vector<ScalarExpr> coeffs)
      : chart_(std::move(chart)), degree_(degree), coeffs_(std::move(coeffs)) {
    check_degree(degree_, chart_.dim());
    if (coeffs_.size() != static_cast<std::size_t>(binom(chart_.dim(), degree_))) {
      throw DomainError("coefficient count does not match chart and degree");
    }
  }

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  const ScalarExpr& at(int flat) const { return coeffs_[flat]; }
  ScalarExpr& at(int flat) { return coeffs_[flat]; }
  const std::vector<ScalarExpr>& coeffs() const { return coeffs_; }

  // Coefficient for an arbitrary index order, with the permutation sign
  // applied; zero on repeated indices.
  ScalarExpr component(std::vector<int> idx) const {
    int sign = sort_sign(idx);
    if (sign == 0) return ScalarExpr();
    const ScalarExpr& c = coeffs_[tuple_rank(chart_.dim(), idx)];
    return sign > 0 ? c : -c;
  }

  // Accumulate v onto the coefficient addressed by `idx`, sign-adjusted.
  void add_term(std::vector<int> idx, const ScalarExpr& v) {
    int sign = sort_sign(idx);
    if (sign == 0) return;
    ScalarExpr& c = coeffs_[tuple_rank(chart_.dim(), idx)];
    c = sign > 0 ? c + v : c - v;
  }

  std::vector<double> eval(std::span<const double> p) const {
    std::vector<double> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i].eval(p);
    return out;
  }
  std::vector<double> eval(std::initializer_list<double> p) const {
    return eval(std::span<const double>(p.begin(), p.size()));
  }

  AltTensor simplified() const {
    AltTensor out(chart_, degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i].simplified();
    return out;
  }

  // Coefficient-wise partial derivative; the tensor-level derivative along a
  // frozen variable such as the time slot.
  AltTensor partial(int var) const {
    AltTensor out(chart_, degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i].partial(var);
    return out;
  }

  // Structural test; run simplified() first for a semantic one.
  bool is_zero() const {
    for (const ScalarExpr& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  std::string str() const;

  friend AltTensor operator+(const AltTensor& a, const AltTensor& b) {
    a.check_same(b);
    AltTensor out(a.chart_, a.degree_);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
      out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    }
    return out;
  }

  friend AltTensor operator-(const AltTensor& a, const AltTensor& b) {
    a.check_same(b);
    AltTensor out(a.chart_, a.degree_);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
      out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    }
    return out;
  }

  friend AltTensor operator-(const AltTensor& a) {
    AltTensor out(a.chart_, a.degree_);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = -a.coeffs_[i];
    return out;
  }

  friend AltTensor operator*(const ScalarExpr& f, const AltTensor& a) {
    AltTensor out(a.chart_, a.degree_);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = f * a.coeffs_[i];
    return out;
  }

 private:
  // Degree above the dimension is allowed: such tensors are identically zero
  // and carry no coefficients, which keeps top-degree residuals uniform on
  // low-dimensional charts.
  static void check_degree(int degree, int dim) {
    (void)dim;
    if (degree < 0 || degree > 3) {
      throw UnsupportedDegree("tensor degree " + std::to_string(degree) +
                              " outside the supported range 0..3");
    }
  }

  void check_same(const AltTensor& other) const {
    if (chart_ != other.chart_) {
      throw ChartMismatch("tensors live on different charts: " + chart_.str() + " vs " +
                          other.chart_.str());
    }
    if (degree_ != other.degree_) {
      throw DomainError("tensor degrees differ: " + std::to_string(degree_) + " vs " +
                        std::to_string(other.degree_));
    }
  }

  Chart chart_;
  int degree_ = 0;
  std::vector<ScalarExpr> coeffs_;
};

using Form = AltTensor<Variance::Covariant>;
using Multivector = AltTensor<Variance::Contravariant>;

template <>
std::string AltTensor<Variance::Covariant>::str() const;
template <>
std::string AltTensor<Variance::Contravariant>::str() const;

// Vector field on a chart: one symbolic component per coordinate.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(Chart chart)
      : chart_(std::move(chart)), comps_(static_cast<std::size_t>(chart_.dim())) {}
  VectorField(Chart chart, std::vector<ScalarExpr> comps)
      : chart_(std::move(chart)), comps_(std::move(comps)) {
    if (comps_.size() != static_cast<std::size_t>(chart_.dim())) {
      throw DomainError("component count does not match chart dimension");
    }
  }

  const Chart& chart() const { return chart_; }
  int dim() const { return chart_.dim(); }
  const ScalarExpr& comp(int i) const { return comps_[i]; }
  ScalarExpr& comp(int i) { return comps_[i]; }
  const std::vector<ScalarExpr>& comps() const { return comps_; }

  std::vector<double> eval(std::span<const double> p) const {
    std::vector<double> out(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out[i] = comps_[i].eval(p);
    return out;
  }
  std::vector<double> eval(std::initializer_list<double> p) const {
    return eval(std::span<const double>(p.begin(), p.size()));
  }

  VectorField simplified() const;
  VectorField partial(int var) const;
  bool is_zero() const {
    for (const ScalarExpr& c : comps_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }
  std::string str() const;

  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a);
  friend VectorField operator*(const ScalarExpr& f, const VectorField& a);

 private:
  Chart chart_;
  std::vector<ScalarExpr> comps_;
};

// Directional derivative X(f) over the chart coordinates.
ScalarExpr apply(const VectorField& x, const ScalarExpr& f);

// Lie bracket of vector fields, [X,Y]^i = X(Y^i) - Y(X^i).
VectorField lie_bracket(const VectorField& x, const VectorField& y);

// Exterior differential of a function, df.
Form differential(const Chart& chart, const ScalarExpr& f);

// Exterior differential; input degree at most 2.
Form exterior_d(const Form& a);

// Interior product in the first slot; input degree at least 1.
Form interior(const VectorField& x, const Form& a);

// Lie derivative of a form along a vector field (Cartan formula); input
// degree at most 2.
Form lie_derivative(const VectorField& x, const Form& a);

// Exterior products; the result degree is capped at 3.
Form wedge(const Form& a, const Form& b);
Multivector wedge(const Multivector& a, const Multivector& b);

// Schouten bracket of multivectors for degrees 1 and 2, graded so that a
// bivector B is a Poisson structure exactly when schouten(B, B) vanishes and
// a Jacobi pair (L, E) satisfies schouten(L, L) = 2 wedge(E, L).
Multivector schouten(const Multivector& a, const Multivector& b);

// Bivector applied to a 1-form: beta(sharp(L, alpha)) = contract2(L, alpha, beta).
VectorField sharp(const Multivector& lambda, const Form& alpha);

// Full contraction of a degree-2 tensor with two arguments of the opposite
// variance.
ScalarExpr contract2(const Multivector& lambda, const Form& a, const Form& b);
ScalarExpr contract2(const Form& omega, const VectorField& x, const VectorField& y);

// Pairing of a 1-form with a vector field.
ScalarExpr pair(const Form& alpha, const VectorField& x);

// Degree-1 conversions between the two component containers.
Multivector as_multivector(const VectorField& x);
VectorField as_vector_field(const Multivector& m);

}  // namespace e1dirac

#endif  // E1DIRAC_TENSOR_HPP_

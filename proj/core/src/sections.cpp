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

#include "e1dirac/sections.hpp"

#include <sstream>
#include <utility>

#include "e1dirac/error.hpp"

namespace e1dirac {

namespace {

const ScalarExpr kHalf = ScalarExpr::rational(1, 2);

void check_chart(const Chart& a, const Chart& b) {
  if (a != b) {
    throw ChartMismatch("sections live on different charts: " + a.str() + " vs " + b.str());
  }
}

}  // namespace

E1Section::E1Section(VectorField x, ScalarExpr f_in, Form a, ScalarExpr g_in)
    : X(std::move(x)), f(std::move(f_in)), alpha(std::move(a)), g(std::move(g_in)) {
  check_chart(X.chart(), alpha.chart());
  if (alpha.degree() != 1) throw DomainError("cotangent part must be a 1-form");
}

std::vector<double> E1Section::eval(std::span<const double> p) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(2 * X.dim() + 2));
  for (int i = 0; i < X.dim(); ++i) out.push_back(X.comp(i).eval(p));
  out.push_back(f.eval(p));
  for (int i = 0; i < X.dim(); ++i) out.push_back(alpha.at(i).eval(p));
  out.push_back(g.eval(p));
  return out;
}

E1Section E1Section::simplified() const {
  return E1Section(X.simplified(), f.simplified(), alpha.simplified(), g.simplified());
}

std::string E1Section::str() const {
  std::ostringstream os;
  os << '(' << X.str() << ", " << f.simplified().str() << ") + (" << alpha.str() << ", "
     << g.simplified().str() << ')';
  return os.str();
}

E1Section operator+(const E1Section& a, const E1Section& b) {
  return E1Section(a.X + b.X, a.f + b.f, a.alpha + b.alpha, a.g + b.g);
}

E1Section operator-(const E1Section& a, const E1Section& b) {
  return E1Section(a.X - b.X, a.f - b.f, a.alpha - b.alpha, a.g - b.g);
}

E1Section operator-(const E1Section& a) {
  return E1Section(-a.X, -a.f, -a.alpha, -a.g);
}

E1Section operator*(const ScalarExpr& h, const E1Section& a) {
  return E1Section(h * a.X, h * a.f, h * a.alpha, h * a.g);
}

TMSection::TMSection(VectorField x, Form a) : X(std::move(x)), alpha(std::move(a)) {
  check_chart(X.chart(), alpha.chart());
  if (alpha.degree() != 1) throw DomainError("cotangent part must be a 1-form");
}

std::vector<double> TMSection::eval(std::span<const double> p) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(2 * X.dim()));
  for (int i = 0; i < X.dim(); ++i) out.push_back(X.comp(i).eval(p));
  for (int i = 0; i < X.dim(); ++i) out.push_back(alpha.at(i).eval(p));
  return out;
}

TMSection TMSection::simplified() const {
  return TMSection(X.simplified(), alpha.simplified());
}

TMSection operator+(const TMSection& a, const TMSection& b) {
  return TMSection(a.X + b.X, a.alpha + b.alpha);
}

TMSection operator-(const TMSection& a, const TMSection& b) {
  return TMSection(a.X - b.X, a.alpha - b.alpha);
}

TMSection operator*(const ScalarExpr& h, const TMSection& a) {
  return TMSection(h * a.X, h * a.alpha);
}

ScalarExpr pairing_plus(const E1Section& a, const E1Section& b) {
  check_chart(a.chart(), b.chart());
  return kHalf * (pair(a.alpha, b.X) + b.f * a.g + pair(b.alpha, a.X) + a.f * b.g);
}

ScalarExpr pairing_minus(const E1Section& a, const E1Section& b) {
  check_chart(a.chart(), b.chart());
  return kHalf * (pair(a.alpha, b.X) + b.f * a.g - (pair(b.alpha, a.X) + a.f * b.g));
}

ScalarExpr pairing_plus(const TMSection& a, const TMSection& b) {
  check_chart(a.chart(), b.chart());
  return kHalf * (pair(a.alpha, b.X) + pair(b.alpha, a.X));
}

ScalarExpr pairing_minus(const TMSection& a, const TMSection& b) {
  check_chart(a.chart(), b.chart());
  return kHalf * (pair(a.alpha, b.X) - pair(b.alpha, a.X));
}

E1Section extended_bracket(const E1Section& a, const E1Section& b) {
  check_chart(a.chart(), b.chart());
  const Chart& chart = a.chart();

  VectorField x_out = lie_bracket(a.X, b.X);
  ScalarExpr f_out = apply(a.X, b.f) - apply(b.X, a.f);

  ScalarExpr ba = pair(a.alpha, b.X);  // alpha1(X2)
  ScalarExpr ab = pair(b.alpha, a.X);  // alpha2(X1)

  Form alpha_out = lie_derivative(a.X, b.alpha) - lie_derivative(b.X, a.alpha) +
                   kHalf * differential(chart, ba - ab) + a.f * b.alpha - b.f * a.alpha +
                   kHalf * (b.g * differential(chart, a.f) - a.g * differential(chart, b.f) -
                            a.f * differential(chart, b.g) + b.f * differential(chart, a.g));

  ScalarExpr g_out =
      apply(a.X, b.g) - apply(b.X, a.g) + kHalf * (ba - ab - b.f * a.g + a.f * b.g);

  return E1Section(std::move(x_out), std::move(f_out), std::move(alpha_out), std::move(g_out));
}

TMSection courant_bracket(const TMSection& a, const TMSection& b) {
  check_chart(a.chart(), b.chart());
  VectorField x_out = lie_bracket(a.X, b.X);
  Form alpha_out = lie_derivative(a.X, b.alpha) - lie_derivative(b.X, a.alpha) +
                   kHalf * differential(a.chart(), pair(a.alpha, b.X) - pair(b.alpha, a.X));
  return TMSection(std::move(x_out), std::move(alpha_out));
}

E1Section leibniz_defect(const E1Section& a, const E1Section& b, const ScalarExpr& h) {
  const Chart& chart = a.chart();
  E1Section dh_section(VectorField(chart), ScalarExpr(), differential(chart, h), ScalarExpr());
  return extended_bracket(a, h * b) - h * extended_bracket(a, b) - apply(a.X, h) * b +
         pairing_plus(a, b) * dh_section;
}

ScalarExpr t_tensor(const E1Section& a, const E1Section& b, const E1Section& c) {
  return pairing_plus(extended_bracket(a, b), c);
}

namespace {

// One cyclic term of the closed form.
ScalarExpr t_term(const E1Section& a, const E1Section& b, const E1Section& c) {
  ScalarExpr inner = pair(a.alpha, b.X) + b.f * a.g;  // alpha1(X2) + f2 g1
  return pair(c.alpha, lie_bracket(a.X, b.X)) + c.g * (apply(a.X, b.f) - apply(b.X, a.f)) +
         apply(c.X, inner) + c.f * inner;
}

}  // namespace

ScalarExpr t_tensor_isotropic(const E1Section& a, const E1Section& b, const E1Section& c) {
  check_chart(a.chart(), b.chart());
  check_chart(a.chart(), c.chart());
  return kHalf * (t_term(a, b, c) + t_term(b, c, a) + t_term(c, a, b));
}

E1Section jacobiator_defect(const E1Section& a, const E1Section& b, const E1Section& c) {
  E1Section cyc = extended_bracket(extended_bracket(a, b), c) +
                  extended_bracket(extended_bracket(b, c), a) +
                  extended_bracket(extended_bracket(c, a), b);
  ScalarExpr t = t_tensor(a, b, c);
  E1Section correction(VectorField(a.chart()), ScalarExpr(),
                       differential(a.chart(), t), t);
  return cyc - correction;
}

}  // namespace e1dirac

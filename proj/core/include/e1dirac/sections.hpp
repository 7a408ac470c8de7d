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

#ifndef E1DIRAC_SECTIONS_HPP_
#define E1DIRAC_SECTIONS_HPP_

#include <span>
#include <string>
#include <vector>

#include "e1dirac/chart.hpp"
#include "e1dirac/expr.hpp"
#include "e1dirac/tensor.hpp"

namespace e1dirac {

// Section of the extended big bundle over a chart: a vector field and a
// function on the tangent side, a 1-form and a function on the cotangent
// side. Written (X, f) + (alpha, g).
struct E1Section {
  VectorField X;
  ScalarExpr f;
  Form alpha;
  ScalarExpr g;

  E1Section() = default;
  explicit E1Section(Chart chart) : X(chart), alpha(std::move(chart), 1) {}
  E1Section(VectorField x, ScalarExpr f_in, Form a, ScalarExpr g_in);

  const Chart& chart() const { return X.chart(); }

  // Fiber coordinates (X..., f, alpha..., g); length 2 dim + 2.
  std::vector<double> eval(std::span<const double> p) const;
  std::vector<double> eval(std::initializer_list<double> p) const {
    return eval(std::span<const double>(p.begin(), p.size()));
  }

  E1Section simplified() const;
  std::string str() const;
};

E1Section operator+(const E1Section& a, const E1Section& b);
E1Section operator-(const E1Section& a, const E1Section& b);
E1Section operator-(const E1Section& a);
E1Section operator*(const ScalarExpr& h, const E1Section& a);

// Section of the classical big bundle, X + alpha.
struct TMSection {
  VectorField X;
  Form alpha;

  TMSection() = default;
  explicit TMSection(Chart chart) : X(chart), alpha(std::move(chart), 1) {}
  TMSection(VectorField x, Form a);

  const Chart& chart() const { return X.chart(); }
  std::vector<double> eval(std::span<const double> p) const;
  TMSection simplified() const;
};

TMSection operator+(const TMSection& a, const TMSection& b);
TMSection operator-(const TMSection& a, const TMSection& b);
TMSection operator*(const ScalarExpr& h, const TMSection& a);

// Symmetric and antisymmetric pairings,
//   <e1,e2>_pm = 1/2 (alpha1(X2) + f2 g1 pm (alpha2(X1) + f1 g2)).
ScalarExpr pairing_plus(const E1Section& a, const E1Section& b);
ScalarExpr pairing_minus(const E1Section& a, const E1Section& b);

// Classical counterparts on TM sections.
ScalarExpr pairing_plus(const TMSection& a, const TMSection& b);
ScalarExpr pairing_minus(const TMSection& a, const TMSection& b);

// Anchor: the vector-field part.
inline const VectorField& anchor(const E1Section& e) { return e.X; }

// Distinguished 1-cochain: the function on the tangent side. On sections of
// any of the families built here it restricts to the defining 1-cocycle.
inline const ScalarExpr& phi(const E1Section& e) { return e.f; }

// Extended bracket on sections of the extended big bundle.
E1Section extended_bracket(const E1Section& a, const E1Section& b);

// Classical bracket on sections of the classical big bundle.
TMSection courant_bracket(const TMSection& a, const TMSection& b);

// [e1, h e2] - h [e1, e2] - X1(h) e2 + <e1,e2>_+ ((0,0) + (dh,0)).
// Identically zero; exposed so the identity can be checked numerically.
E1Section leibniz_defect(const E1Section& a, const E1Section& b, const ScalarExpr& h);

// Obstruction tensor T(e1,e2,e3) = <[e1,e2], e3>_+ via the bracket.
ScalarExpr t_tensor(const E1Section& a, const E1Section& b, const E1Section& c);

// Closed form of the same tensor, valid when the three sections are pairwise
// isotropic for <,>_+; no bracket evaluation involved.
ScalarExpr t_tensor_isotropic(const E1Section& a, const E1Section& b, const E1Section& c);

// Cyclic double bracket minus (0,0) + (dT, T); zero on sections of any
// isotropic subbundle.
E1Section jacobiator_defect(const E1Section& a, const E1Section& b, const E1Section& c);

}  // namespace e1dirac

#endif  // E1DIRAC_SECTIONS_HPP_

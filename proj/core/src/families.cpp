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

#include "e1dirac/families.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "e1dirac/error.hpp"

namespace e1dirac {

namespace {

const ScalarExpr kOne = ScalarExpr::rational(1);
const ScalarExpr kTwo = ScalarExpr::rational(2);

ScalarExpr num(long long n) { return ScalarExpr::rational(n); }

// Coordinate 1-form dx_i.
Form coordinate_form(const Chart& chart, int i) {
  Form out(chart, 1);
  out.at(i) = kOne;
  return out;
}

// Coordinate vector field d/dx_i.
VectorField coordinate_field(const Chart& chart, int i) {
  VectorField out(chart);
  out.comp(i) = kOne;
  return out;
}

void check_degree(const Form& a, int degree, const char* what) {
  if (a.degree() != degree) {
    throw UnsupportedDegree(std::string(what) + " must have degree " + std::to_string(degree));
  }
}

void check_degree(const Multivector& a, int degree, const char* what) {
  if (a.degree() != degree) {
    throw UnsupportedDegree(std::string(what) + " must have degree " + std::to_string(degree));
  }
}

}  // namespace

const char* family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::DiracForm:
      return "dirac_form";
    case FamilyKind::DiracBivector:
      return "dirac_bivector";
    case FamilyKind::Lcp:
      return "lcp";
    case FamilyKind::Precontact:
      return "precontact";
    case FamilyKind::Jacobi:
      return "jacobi";
    case FamilyKind::HomogeneousPoisson:
      return "homogeneous_poisson";
  }
  return "unknown";
}

DiracFamily from_dirac_graph(const Form& omega) {
  check_degree(omega, 2, "graph 2-form");
  const Chart& chart = omega.chart();
  DiracFamily family;
  family.kind = FamilyKind::DiracForm;
  family.chart = chart;
  family.big_form = omega;
  family.small_form = Form(chart, 1);
  family.bivector = Multivector(chart, 2);
  family.vector_part = VectorField(chart);
  for (int i = 0; i < chart.dim(); ++i) {
    VectorField di = coordinate_field(chart, i);
    family.frame.push_back(E1Section(di, ScalarExpr(), interior(di, omega), ScalarExpr()));
  }
  family.frame.push_back(E1Section(VectorField(chart), ScalarExpr(), Form(chart, 1), kOne));
  return family;
}

DiracFamily from_dirac_graph(const Multivector& lambda) {
  check_degree(lambda, 2, "graph bivector");
  const Chart& chart = lambda.chart();
  DiracFamily family;
  family.kind = FamilyKind::DiracBivector;
  family.chart = chart;
  family.big_form = Form(chart, 2);
  family.small_form = Form(chart, 1);
  family.bivector = lambda;
  family.vector_part = VectorField(chart);
  for (int i = 0; i < chart.dim(); ++i) {
    Form dxi = coordinate_form(chart, i);
    family.frame.push_back(E1Section(sharp(lambda, dxi), ScalarExpr(), dxi, ScalarExpr()));
  }
  family.frame.push_back(E1Section(VectorField(chart), ScalarExpr(), Form(chart, 1), kOne));
  return family;
}

DiracFamily from_lcp(const Form& omega, const Form& lee) {
  check_degree(omega, 2, "lcp 2-form");
  check_degree(lee, 1, "lee 1-form");
  const Chart& chart = omega.chart();
  DiracFamily family;
  family.kind = FamilyKind::Lcp;
  family.chart = chart;
  family.big_form = omega;
  family.small_form = lee;
  family.bivector = Multivector(chart, 2);
  family.vector_part = VectorField(chart);
  for (int i = 0; i < chart.dim(); ++i) {
    VectorField di = coordinate_field(chart, i);
    family.frame.push_back(E1Section(di, -lee.at(i), interior(di, omega), ScalarExpr()));
  }
  family.frame.push_back(E1Section(VectorField(chart), ScalarExpr(), lee, kOne));
  return family;
}

DiracFamily from_precontact(const Form& eta) {
  check_degree(eta, 1, "precontact 1-form");
  const Chart& chart = eta.chart();
  DiracFamily family;
  family.kind = FamilyKind::Precontact;
  family.chart = chart;
  family.big_form = Form(chart, 2);
  family.small_form = eta;
  family.bivector = Multivector(chart, 2);
  family.vector_part = VectorField(chart);
  Form deta = exterior_d(eta);
  for (int i = 0; i < chart.dim(); ++i) {
    VectorField di = coordinate_field(chart, i);
    family.frame.push_back(E1Section(di, ScalarExpr(), interior(di, deta), -eta.at(i)));
  }
  family.frame.push_back(E1Section(VectorField(chart), kOne, eta, ScalarExpr()));
  return family;
}

DiracFamily from_jacobi(const Multivector& lambda, const VectorField& reeb) {
  check_degree(lambda, 2, "jacobi bivector");
  if (lambda.chart() != reeb.chart()) {
    throw ChartMismatch("jacobi data lives on different charts");
  }
  const Chart& chart = lambda.chart();
  DiracFamily family;
  family.kind = FamilyKind::Jacobi;
  family.chart = chart;
  family.big_form = Form(chart, 2);
  family.small_form = Form(chart, 1);
  family.bivector = lambda;
  family.vector_part = reeb;
  for (int i = 0; i < chart.dim(); ++i) {
    Form dxi = coordinate_form(chart, i);
    family.frame.push_back(
        E1Section(sharp(lambda, dxi), -reeb.comp(i), dxi, ScalarExpr()));
  }
  family.frame.push_back(E1Section(reeb, ScalarExpr(), Form(chart, 1), kOne));
  return family;
}

DiracFamily from_homogeneous_poisson(const Multivector& pi, const VectorField& homothety) {
  check_degree(pi, 2, "poisson bivector");
  if (pi.chart() != homothety.chart()) {
    throw ChartMismatch("homogeneous poisson data lives on different charts");
  }
  const Chart& chart = pi.chart();
  DiracFamily family;
  family.kind = FamilyKind::HomogeneousPoisson;
  family.chart = chart;
  family.big_form = Form(chart, 2);
  family.small_form = Form(chart, 1);
  family.bivector = pi;
  family.vector_part = homothety;
  for (int i = 0; i < chart.dim(); ++i) {
    Form dxi = coordinate_form(chart, i);
    family.frame.push_back(
        E1Section(sharp(pi, dxi), ScalarExpr(), dxi, homothety.comp(i)));
  }
  family.frame.push_back(E1Section(-homothety, kOne, Form(chart, 1), ScalarExpr()));
  return family;
}

E1Section combine(const DiracFamily& family, std::span<const ScalarExpr> coeffs) {
  if (coeffs.size() != family.frame.size()) {
    throw DomainError("frame combination needs " + std::to_string(family.frame.size()) +
                      " coefficients");
  }
  E1Section acc(family.chart);
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc = acc + coeffs[i] * family.frame[i];
  return acc;
}

std::vector<Residual> structure_residuals(const DiracFamily& family) {
  std::vector<Residual> out;
  auto push_form = [&out](const std::string& name, const Form& f) {
    out.push_back({name, f.coeffs()});
  };
  auto push_mv = [&out](const std::string& name, const Multivector& m) {
    out.push_back({name, m.coeffs()});
  };
  switch (family.kind) {
    case FamilyKind::DiracForm:
      push_form("two_form_closed", exterior_d(family.big_form));
      break;
    case FamilyKind::DiracBivector:
      push_mv("bivector_poisson", schouten(family.bivector, family.bivector));
      break;
    case FamilyKind::Lcp:
      push_form("lee_form_closed", exterior_d(family.small_form));
      push_form("twisted_closed",
                exterior_d(family.big_form) - wedge(family.small_form, family.big_form));
      break;
    case FamilyKind::Precontact:
      // No structure equations: every 1-form induces an integrable family.
      break;
    case FamilyKind::Jacobi: {
      Multivector el = wedge(as_multivector(family.vector_part), family.bivector);
      push_mv("jacobi_pair", schouten(family.bivector, family.bivector) - kTwo * el);
      push_mv("reeb_invariance",
              schouten(as_multivector(family.vector_part), family.bivector));
      break;
    }
    case FamilyKind::HomogeneousPoisson:
      push_mv("poisson", schouten(family.bivector, family.bivector));
      push_mv("homogeneity",
              schouten(as_multivector(family.vector_part), family.bivector) + family.bivector);
      break;
  }
  return out;
}

CertificationReport certify(const DiracFamily& family, const SampleConfig& config, double tol) {
  CertificationReport report;
  report.tol = tol;
  const int n = family.chart.dim();
  const int m = n + 1;

  std::vector<std::vector<double>> points = sample_points(family.chart, config);
  report.points = static_cast<int>(points.size());

  // Symbolic pairings and obstruction values, evaluated over the samples.
  std::vector<ScalarExpr> pairings;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      pairings.push_back(pairing_plus(family.frame[i], family.frame[j]));
    }
  }
  std::vector<ScalarExpr> t_direct, t_closed;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        t_direct.push_back(t_tensor(family.frame[i], family.frame[j], family.frame[k]));
        t_closed.push_back(
            t_tensor_isotropic(family.frame[i], family.frame[j], family.frame[k]));
      }
    }
  }
  std::vector<Residual> residuals = structure_residuals(family);
  std::vector<double> residual_max(residuals.size(), 0.0);

  report.frame_min_sv = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    for (const ScalarExpr& e : pairings) {
      report.max_isotropy = std::max(report.max_isotropy, std::abs(e.eval(p)));
    }
    for (std::size_t i = 0; i < t_direct.size(); ++i) {
      double d = t_direct[i].eval(p);
      double c = t_closed[i].eval(p);
      report.max_t_direct = std::max(report.max_t_direct, std::abs(d));
      report.max_t_closed = std::max(report.max_t_closed, std::abs(c));
      report.max_t_mismatch = std::max(report.max_t_mismatch, std::abs(d - c));
    }
    for (std::size_t r = 0; r < residuals.size(); ++r) {
      for (const ScalarExpr& e : residuals[r].coeffs) {
        residual_max[r] = std::max(residual_max[r], std::abs(e.eval(p)));
      }
    }
    Eigen::MatrixXd frame_matrix(2 * n + 2, m);
    for (int j = 0; j < m; ++j) {
      std::vector<double> fiber = family.frame[j].eval(p);
      for (int i = 0; i < 2 * n + 2; ++i) frame_matrix(i, j) = fiber[i];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(frame_matrix);
    report.frame_min_sv =
        std::min(report.frame_min_sv, svd.singularValues()(svd.singularValues().size() - 1));
  }
  for (std::size_t r = 0; r < residuals.size(); ++r) {
    report.residuals.emplace_back(residuals[r].name, residual_max[r]);
  }
  report.integrable = report.max_t_direct <= tol && report.max_t_closed <= tol;
  return report;
}

namespace {

// Model section of the tangent kind: a vector field with a function.
struct TangentModel {
  VectorField x;
  ScalarExpr f;
};

// Model section of the cotangent kind: a 1-form with a function.
struct CotangentModel {
  Form alpha;
  ScalarExpr f;
};

bool tangent_model_kind(FamilyKind kind) {
  return kind == FamilyKind::DiracForm || kind == FamilyKind::Lcp ||
         kind == FamilyKind::Precontact;
}

TangentModel tangent_bracket(const DiracFamily& family, const TangentModel& u,
                             const TangentModel& v) {
  TangentModel out;
  out.x = lie_bracket(u.x, v.x);
  if (family.kind == FamilyKind::Precontact) {
    out.f = apply(u.x, v.f) - apply(v.x, u.f);
    return out;
  }
  // 2-form kinds twisted by the lee form (zero for plain graphs).
  const Form& lee = family.small_form;
  out.f = contract2(family.big_form, u.x, v.x) + apply(u.x, v.f) - v.f * pair(lee, u.x) -
          apply(v.x, u.f) + u.f * pair(lee, v.x);
  return out;
}

CotangentModel cotangent_bracket(const DiracFamily& family, const CotangentModel& u,
                                 const CotangentModel& v) {
  const Chart& chart = family.chart;
  const Multivector& biv = family.bivector;
  VectorField su = sharp(biv, u.alpha);
  VectorField sv = sharp(biv, v.alpha);
  CotangentModel out;
  Form base = lie_derivative(su, v.alpha) - lie_derivative(sv, u.alpha) -
              differential(chart, contract2(biv, u.alpha, v.alpha));
  if (family.kind == FamilyKind::HomogeneousPoisson) {
    const VectorField& z = family.vector_part;
    out.alpha = base - u.f * (lie_derivative(z, v.alpha) - v.alpha) +
                v.f * (lie_derivative(z, u.alpha) - u.alpha);
    out.f = apply(su, v.f) - apply(sv, u.f) + v.f * apply(z, u.f) - u.f * apply(z, v.f);
    return out;
  }
  // Jacobi kind (plain bivector graphs use a zero companion field).
  const VectorField& reeb = family.vector_part;
  out.alpha = base + u.f * lie_derivative(reeb, v.alpha) - v.f * lie_derivative(reeb, u.alpha) -
              (pair(u.alpha, reeb) * v.alpha - pair(v.alpha, reeb) * u.alpha);
  out.f = -contract2(biv, u.alpha, v.alpha) + apply(su, v.f) - apply(sv, u.f) +
          u.f * apply(reeb, v.f) - v.f * apply(reeb, u.f);
  return out;
}

}  // namespace

ModelBracketReport model_bracket_check(const DiracFamily& family, const SampleConfig& config,
                                       int pairs, std::uint64_t seed) {
  ModelBracketReport report;
  report.pairs = pairs;
  const int n = family.chart.dim();
  std::vector<std::vector<double>> points = sample_points(family.chart, config);
  report.points = static_cast<int>(points.size());
  Rng rng(seed);

  auto lift_coeffs = [&](std::span<const ScalarExpr> c) { return combine(family, c); };

  for (int pair_index = 0; pair_index < pairs; ++pair_index) {
    // Random model sections with polynomial parts.
    std::vector<ScalarExpr> cu, cv;
    for (int i = 0; i <= n; ++i) {
      cu.push_back(random_polynomial(rng, n, 2));
      cv.push_back(random_polynomial(rng, n, 2));
    }
    E1Section lifted_bracket = extended_bracket(lift_coeffs(cu), lift_coeffs(cv));

    std::vector<ScalarExpr> cb(n + 1);
    std::vector<ScalarExpr> u_part(cu.begin(), cu.begin() + n);
    std::vector<ScalarExpr> v_part(cv.begin(), cv.begin() + n);
    if (tangent_model_kind(family.kind)) {
      TangentModel u{VectorField(family.chart, std::move(u_part)), cu[n]};
      TangentModel v{VectorField(family.chart, std::move(v_part)), cv[n]};
      TangentModel uv = tangent_bracket(family, u, v);
      for (int i = 0; i < n; ++i) cb[i] = uv.x.comp(i);
      cb[n] = uv.f;
    } else {
      CotangentModel u{Form(family.chart, 1, std::move(u_part)), cu[n]};
      CotangentModel v{Form(family.chart, 1, std::move(v_part)), cv[n]};
      CotangentModel uv = cotangent_bracket(family, u, v);
      for (int i = 0; i < n; ++i) cb[i] = uv.alpha.at(i);
      cb[n] = uv.f;
    }
    E1Section model_bracket = lift_coeffs(cb);

    E1Section defect = lifted_bracket - model_bracket;
    for (const auto& p : points) {
      for (double v : defect.eval(p)) {
        report.max_defect = std::max(report.max_defect, std::abs(v));
      }
    }
  }
  return report;
}

}  // namespace e1dirac

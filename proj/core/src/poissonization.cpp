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

#include "e1dirac/poissonization.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "e1dirac/error.hpp"
#include "e1dirac/foliation.hpp"

namespace e1dirac {

namespace {

// Componentwise time derivative; the time variable is the chart dimension.
E1Section time_partial(const E1Section& section) {
  const int t = section.chart().dim();
  return E1Section(section.X.partial(t), section.f.partial(t),
                   section.alpha.partial(t), section.g.partial(t));
}

ScalarExpr time_var(const Chart& base) {
  return ScalarExpr::variable(base.dim());
}

}  // namespace

TMSection psi_apply(const E1Section& section) {
  const Chart& base = section.chart();
  if (base.is_time_extended()) {
    throw ChartMismatch("psi expects a section over a plain chart");
  }
  const Chart ext = base.time_extended();
  const int n = base.dim();
  const ScalarExpr et = exp(time_var(base));
  VectorField x(ext);
  for (int i = 0; i < n; ++i) x.comp(i) = section.X.comp(i);
  x.comp(n) = section.f;
  Form alpha(ext, 1);
  for (int i = 0; i < n; ++i) alpha.at(i) = (et * section.alpha.at(i)).simplified();
  alpha.at(n) = (et * section.g).simplified();
  return TMSection(std::move(x), std::move(alpha));
}

E1Section psi_inverse(const TMSection& section, const Chart& base_chart) {
  const int n = base_chart.dim();
  if (!(section.chart() == base_chart.time_extended())) {
    throw ChartMismatch("section does not live on the extended chart");
  }
  const ScalarExpr emt = exp(-time_var(base_chart));
  VectorField x(base_chart);
  for (int i = 0; i < n; ++i) x.comp(i) = section.X.comp(i);
  Form alpha(base_chart, 1);
  for (int i = 0; i < n; ++i) {
    alpha.at(i) = (emt * section.alpha.at(i)).simplified();
  }
  return E1Section(std::move(x), section.X.comp(n), std::move(alpha),
                   (emt * section.alpha.at(n)).simplified());
}

E1Section bar_bracket(const E1Section& a, const E1Section& b) {
  const E1Section da = time_partial(a);
  const E1Section db = time_partial(b);
  E1Section out = extended_bracket(a, b) + a.f * db - b.f * da;
  out.g = out.g + pairing_plus(b, da) - pairing_plus(a, db);
  return out.simplified();
}

Multivector jacobi_poissonization(const Multivector& lam, const VectorField& e) {
  if (!(lam.chart() == e.chart())) {
    throw ChartMismatch("bivector and vector field live on different charts");
  }
  if (lam.degree() != 2) throw UnsupportedDegree("expected a bivector");
  const Chart ext = lam.chart().time_extended();
  const int n = lam.chart().dim();
  const ScalarExpr emt = exp(-time_var(lam.chart()));
  Multivector tilde(ext, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::vector<int> idx{i, j};
      tilde.add_term(idx, (emt * lam.component(idx)).simplified());
    }
    tilde.add_term(std::vector<int>{i, n}, (-(emt * e.comp(i))).simplified());
  }
  return tilde;
}

std::vector<TMSection> psi_frame(const DiracFamily& family) {
  std::vector<TMSection> out;
  out.reserve(family.frame.size());
  for (const E1Section& s : family.frame) out.push_back(psi_apply(s));
  return out;
}

ClosureReport tilde_closure_check(const Multivector& tilde,
                                  const SampleConfig& config) {
  const Multivector bracket = schouten(tilde, tilde);
  const std::vector<std::vector<double>> points =
      sample_points(tilde.chart(), config);
  ClosureReport report;
  report.points = static_cast<int>(points.size());
  for (const auto& p : points) {
    for (double v : bracket.eval(p)) {
      report.max_residual = std::max(report.max_residual, std::abs(v));
    }
  }
  return report;
}

IsomorphismReport check_isomorphism(const DiracFamily& family,
                                    const SampleConfig& config, int pairs,
                                    unsigned seed) {
  const Chart& base = family.chart;
  const Chart ext = base.time_extended();
  const int m = static_cast<int>(family.frame.size());
  const std::vector<std::vector<double>> points = sample_points(ext, config);
  Rng rng(seed);

  IsomorphismReport report;
  report.pairs = pairs;
  report.points = static_cast<int>(points.size());
  for (int k = 0; k < pairs; ++k) {
    std::vector<ScalarExpr> ca(m), cb(m);
    for (int j = 0; j < m; ++j) {
      // Coefficients over the cylinder: polynomials in chart vars and time.
      ca[j] = random_polynomial(rng, base.dim() + 1, 2);
      cb[j] = random_polynomial(rng, base.dim() + 1, 2);
    }
    const E1Section ea = combine(family, ca);
    const E1Section eb = combine(family, cb);
    const TMSection lhs = psi_apply(bar_bracket(ea, eb));
    const TMSection rhs = courant_bracket(psi_apply(ea), psi_apply(eb));
    const TMSection defect = (lhs - rhs).simplified();
    for (const auto& p : points) {
      for (double v : defect.X.eval(p)) {
        report.max_defect = std::max(report.max_defect, std::abs(v));
      }
      for (double v : defect.alpha.eval(p)) {
        report.max_defect = std::max(report.max_defect, std::abs(v));
      }
    }
  }
  return report;
}

CylinderLeafReport cylinder_leaf_check(const DiracFamily& family,
                                       const SampleConfig& config, int pairs,
                                       unsigned seed) {
  const int n = family.chart.dim();
  const int m = static_cast<int>(family.frame.size());
  const std::vector<TMSection> tilde = psi_frame(family);

  // Pairwise minus pairings of the cylinder frame, symbolic once.
  std::vector<std::vector<ScalarExpr>> pairing(m, std::vector<ScalarExpr>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      pairing[i][j] = pairing_minus(tilde[i], tilde[j]).simplified();
    }
  }

  const std::vector<std::vector<double>> points =
      sample_points(family.chart, config);
  Rng rng(seed);

  CylinderLeafReport report;
  for (const auto& base_point : points) {
    const InducedLeafStructure leaf = induced_structure(family, base_point);
    const int r = leaf.rank;
    if (r == 0) continue;
    const double t = rng.uniform(-1.0, 1.0);
    std::vector<double> ext_point(base_point.begin(), base_point.end());
    ext_point.push_back(t);

    Eigen::MatrixXd p_tilde(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) p_tilde(i, j) = pairing[i][j].eval(ext_point);
    }
    // Extended anchor columns (rho, phi) at the base point.
    Eigen::MatrixXd bar(n + 1, m);
    for (int j = 0; j < m; ++j) {
      const std::vector<double> x = family.frame[j].X.eval(base_point);
      for (int i = 0; i < n; ++i) bar(i, j) = x[i];
      bar(n, j) = family.frame[j].f.eval(base_point);
    }
    Eigen::MatrixXd tangent(n, r);
    for (int i = 0; i < r; ++i) {
      for (int row = 0; row < n; ++row) tangent(row, i) = leaf.tangent[i][row];
    }

    for (int k = 0; k < pairs; ++k) {
      Eigen::VectorXd c1(m), c2(m);
      for (int j = 0; j < m; ++j) {
        c1(j) = rng.uniform(-1.0, 1.0);
        c2(j) = rng.uniform(-1.0, 1.0);
      }
      const Eigen::VectorXd bv1 = bar * c1;
      const Eigen::VectorXd bv2 = bar * c2;
      const double two_form = c1.dot(p_tilde * c2);

      // Base leaf coordinates of the anchor parts.
      const Eigen::VectorXd w1 = tangent.transpose() * bv1.head(n);
      const Eigen::VectorXd w2 = tangent.transpose() * bv2.head(n);
      double predicted = 0.0;
      if (leaf.type == LeafType::Precontact) {
        double phi_12 = 0.0, eta_1 = 0.0, eta_2 = 0.0;
        for (int i = 0; i < r; ++i) {
          eta_1 += leaf.eta[i] * w1(i);
          eta_2 += leaf.eta[i] * w2(i);
          for (int j = 0; j < r; ++j) {
            phi_12 += w1(i) * leaf.big_form[i][j] * w2(j);
          }
        }
        predicted = std::exp(t) * (phi_12 + bv1(n) * eta_2 - bv2(n) * eta_1);
      } else {
        double omega_12 = 0.0;
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < r; ++j) {
            omega_12 += w1(i) * leaf.big_form[i][j] * w2(j);
          }
        }
        predicted = std::exp(t) * omega_12;
      }
      report.max_defect =
          std::max(report.max_defect, std::abs(two_form - predicted));
      ++report.comparisons;
    }
  }
  return report;
}

}  // namespace e1dirac

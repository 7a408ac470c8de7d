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

#include "e1dirac/foliation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "e1dirac/error.hpp"

namespace e1dirac {

namespace {

// Rank by relative cutoff; a dropped singular value within a factor of
// config.gap of the smallest kept one makes the rank call unreliable.
int rank_with_gap(const Eigen::VectorXd& sv, const FoliationConfig& config,
                  const char* what) {
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double tau = config.rank_tol * smax;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tau) ++rank;
  }
  if (rank > 0 && rank < sv.size()) {
    const double kept_min = sv(rank - 1);
    const double dropped_max = sv(rank);
    if (dropped_max > 0.0 && kept_min / dropped_max < config.gap) {
      throw IllConditioned(std::string(what) +
                           ": no clean gap in the singular spectrum");
    }
  }
  return rank;
}

// Columns are the anchor values of the frame sections at the point.
Eigen::MatrixXd anchor_matrix(const DiracFamily& family,
                              std::span<const double> point) {
  const int n = family.chart.dim();
  const int m = static_cast<int>(family.frame.size());
  Eigen::MatrixXd a(n, m);
  for (int j = 0; j < m; ++j) {
    const std::vector<double> x = family.frame[j].X.eval(point);
    for (int i = 0; i < n; ++i) a(i, j) = x[i];
  }
  return a;
}

Eigen::RowVectorXd phi_row(const DiracFamily& family,
                           std::span<const double> point) {
  const int m = static_cast<int>(family.frame.size());
  Eigen::RowVectorXd row(m);
  for (int j = 0; j < m; ++j) row(j) = family.frame[j].f.eval(point);
  return row;
}

// Frame section values stacked as columns, fiber layout (X, f, alpha, g).
Eigen::MatrixXd frame_values(const DiracFamily& family,
                             std::span<const double> point) {
  const int n = family.chart.dim();
  const int m = static_cast<int>(family.frame.size());
  Eigen::MatrixXd values(2 * n + 2, m);
  for (int j = 0; j < m; ++j) {
    const std::vector<double> v = family.frame[j].eval(point);
    for (int i = 0; i < 2 * n + 2; ++i) values(i, j) = v[i];
  }
  return values;
}

// Pairwise minus pairings of the frame at the point, from the stacked values.
Eigen::MatrixXd minus_pairing_matrix(const Eigen::MatrixXd& values, int n) {
  const int m = static_cast<int>(values.cols());
  Eigen::MatrixXd p(m, m);
  for (int i = 0; i < m; ++i) {
    const auto xi = values.col(i).head(n);
    const double fi = values(n, i);
    const auto ai = values.col(i).segment(n + 1, n);
    const double gi = values(2 * n + 1, i);
    for (int j = 0; j < m; ++j) {
      const auto xj = values.col(j).head(n);
      const double fj = values(n, j);
      const auto aj = values.col(j).segment(n + 1, n);
      const double gj = values(2 * n + 1, j);
      p(i, j) = 0.5 * (ai.dot(xj) + fj * gi - aj.dot(xi) - fi * gj);
    }
  }
  return p;
}

std::vector<double> eigen_to_vector(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

// Least squares solve with a residual guard; the targets we pass are always
// in the column span unless the caller asked for unsupported leaf data.
Eigen::VectorXd guarded_solve(const Eigen::JacobiSVD<Eigen::MatrixXd>& svd,
                              const Eigen::MatrixXd& matrix,
                              const Eigen::VectorXd& target, const char* what) {
  const Eigen::VectorXd c = svd.solve(target);
  const double residual = (matrix * c - target).norm();
  if (residual > 1e-7 * std::max(1.0, target.norm())) {
    throw SingularSystem(std::string(what) + ": target is outside the span");
  }
  return c;
}

// One fourth order step along a state-dependent direction field.
template <typename Field>
void rk4_step(std::vector<double>& x, double dt, const Field& field) {
  const std::size_t n = x.size();
  const std::vector<double> k1 = field(x);
  std::vector<double> probe(n);
  for (std::size_t i = 0; i < n; ++i) probe[i] = x[i] + 0.5 * dt * k1[i];
  const std::vector<double> k2 = field(probe);
  for (std::size_t i = 0; i < n; ++i) probe[i] = x[i] + 0.5 * dt * k2[i];
  const std::vector<double> k3 = field(probe);
  for (std::size_t i = 0; i < n; ++i) probe[i] = x[i] + dt * k3[i];
  const std::vector<double> k4 = field(probe);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Exact elimination over scalar expressions. Constant pivots are preferred
// so that catalog frames never divide by a vanishing coefficient.
std::vector<ScalarExpr> solve_symbolic(std::vector<std::vector<ScalarExpr>> m,
                                       std::vector<ScalarExpr> rhs) {
  const int size = static_cast<int>(m.size());
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int r = col; r < size; ++r) {
      if (m[r][col].is_constant() && !m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      for (int r = col; r < size; ++r) {
        if (!m[r][col].is_zero()) {
          pivot = r;
          break;
        }
      }
    }
    if (pivot < 0) {
      throw SingularSystem("symbolic elimination found no usable pivot");
    }
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int r = col + 1; r < size; ++r) {
      if (m[r][col].is_zero()) continue;
      const ScalarExpr factor = (m[r][col] / m[col][col]).simplified();
      for (int c = col; c < size; ++c) {
        m[r][c] = (m[r][c] - factor * m[col][c]).simplified();
      }
      rhs[r] = (rhs[r] - factor * rhs[col]).simplified();
    }
  }
  std::vector<ScalarExpr> x(size);
  for (int row = size - 1; row >= 0; --row) {
    ScalarExpr acc = rhs[row];
    for (int c = row + 1; c < size; ++c) acc = acc - m[row][c] * x[c];
    x[row] = (acc / m[row][row]).simplified();
  }
  return x;
}

// Orthonormal basis of the column span, dropping near-zero directions.
Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& columns) {
  if (columns.cols() == 0) return Eigen::MatrixXd(columns.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-12 * smax) ++rank;
  }
  if (smax == 0.0) rank = 0;
  return svd.matrixU().leftCols(rank);
}

}  // namespace

const char* leaf_type_name(LeafType type) {
  return type == LeafType::Precontact ? "precontact" : "lcp";
}

const char* trace_termination_name(TraceTermination termination) {
  switch (termination) {
    case TraceTermination::Completed:
      return "completed";
    case TraceTermination::RankChanged:
      return "rank-changed";
    case TraceTermination::TypeChanged:
      return "type-changed";
  }
  return "unknown";
}

PointAnalysis analyze_point(const DiracFamily& family,
                            std::span<const double> point,
                            const FoliationConfig& config) {
  const int n = family.chart.dim();
  const int m = static_cast<int>(family.frame.size());
  if (static_cast<int>(point.size()) < n) {
    throw DomainError("point has fewer coordinates than the chart");
  }
  const Eigen::MatrixXd a = anchor_matrix(family, point);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  PointAnalysis out;
  out.rank = rank_with_gap(svd.singularValues(), config, "anchor matrix");
  out.kernel_dim = m - out.rank;
  out.singular_values = eigen_to_vector(svd.singularValues());
  for (int i = 0; i < out.rank; ++i) {
    out.tangent.push_back(eigen_to_vector(svd.matrixU().col(i)));
  }
  const Eigen::RowVectorXd phi = phi_row(family, point);
  out.phi_kernel_max = 0.0;
  for (int i = out.rank; i < m; ++i) {
    const Eigen::VectorXd c = svd.matrixV().col(i);
    out.kernel.push_back(eigen_to_vector(c));
    out.phi_kernel_max = std::max(out.phi_kernel_max, std::abs(phi * c));
  }
  out.type = out.phi_kernel_max > config.phi_tol ? LeafType::Precontact
                                                 : LeafType::Lcp;
  return out;
}

BarAnalysis bar_distribution(const DiracFamily& family,
                             std::span<const double> point,
                             const FoliationConfig& config) {
  const int n = family.chart.dim();
  const int m = static_cast<int>(family.frame.size());
  Eigen::MatrixXd bar(n + 1, m);
  bar.topRows(n) = anchor_matrix(family, point);
  bar.row(n) = phi_row(family, point);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(bar);
  BarAnalysis out;
  out.bar_rank = rank_with_gap(svd.singularValues(), config, "extended anchor");
  out.singular_values = eigen_to_vector(svd.singularValues());
  return out;
}

InducedLeafStructure induced_structure(const DiracFamily& family,
                                       std::span<const double> point,
                                       const FoliationConfig& config) {
  const PointAnalysis analysis = analyze_point(family, point, config);
  const int n = family.chart.dim();
  const int m = static_cast<int>(family.frame.size());
  const Eigen::MatrixXd values = frame_values(family, point);
  const Eigen::MatrixXd pairing = minus_pairing_matrix(values, n);
  const Eigen::MatrixXd a = values.topRows(n);
  const Eigen::RowVectorXd phi = values.row(n);

  InducedLeafStructure out;
  out.type = analysis.type;
  out.rank = analysis.rank;
  out.tangent = analysis.tangent;
  const int r = analysis.rank;
  out.big_form.assign(r, std::vector<double>(r, 0.0));

  std::vector<Eigen::VectorXd> pre(r);
  if (analysis.type == LeafType::Precontact) {
    // Solve through the extended anchor so the cocycle value is pinned.
    Eigen::MatrixXd bar(n + 1, m);
    bar.topRows(n) = a;
    bar.row(n) = phi;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(bar,
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(config.rank_tol);
    Eigen::VectorXd vertical = Eigen::VectorXd::Zero(n + 1);
    vertical(n) = 1.0;
    const Eigen::VectorXd c_eta =
        guarded_solve(svd, bar, vertical, "vertical section");
    for (int i = 0; i < r; ++i) {
      Eigen::VectorXd target = Eigen::VectorXd::Zero(n + 1);
      for (int row = 0; row < n; ++row) target(row) = analysis.tangent[i][row];
      pre[i] = guarded_solve(svd, bar, target, "leaf tangent lift");
    }
    out.eta.resize(r);
    for (int i = 0; i < r; ++i) out.eta[i] = c_eta.dot(pairing * pre[i]);
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a,
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(config.rank_tol);
    for (int i = 0; i < r; ++i) {
      Eigen::VectorXd target(n);
      for (int row = 0; row < n; ++row) target(row) = analysis.tangent[i][row];
      pre[i] = guarded_solve(svd, a, target, "leaf tangent lift");
    }
    out.lee.resize(r);
    for (int i = 0; i < r; ++i) out.lee[i] = -(phi * pre[i]).value();
  }
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      out.big_form[i][j] = pre[i].dot(pairing * pre[j]);
    }
  }
  return out;
}

Form induced_eta_symbolic(const DiracFamily& family) {
  const int n = family.chart.dim();
  const int m = static_cast<int>(family.frame.size());
  if (m != n + 1) throw DomainError("frame must have chart dimension plus one sections");
  std::vector<std::vector<ScalarExpr>> bar(
      n + 1, std::vector<ScalarExpr>(m, ScalarExpr()));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) bar[i][j] = family.frame[j].X.comp(i);
    bar[n][j] = family.frame[j].f;
  }
  std::vector<ScalarExpr> vertical(n + 1, ScalarExpr());
  vertical[n] = ScalarExpr::rational(1);
  const E1Section e_eta = combine(family, solve_symbolic(bar, vertical));

  Form eta(family.chart, 1);
  for (int i = 0; i < n; ++i) {
    std::vector<ScalarExpr> target(n + 1, ScalarExpr());
    target[i] = ScalarExpr::rational(1);
    const E1Section lift = combine(family, solve_symbolic(bar, target));
    eta.at(i) = pairing_minus(e_eta, lift).simplified();
  }
  return eta;
}

namespace {

LeafTrace trace_impl(const DiracFamily& family, std::span<const double> start,
                     const TraceOptions& options, const FoliationConfig& config,
                     bool extended) {
  const int n = family.chart.dim();
  const int m = static_cast<int>(family.frame.size());
  const int state_dim = extended ? n + 1 : n;
  if (static_cast<int>(start.size()) < state_dim) {
    throw DomainError("trace start point is shorter than the state");
  }
  std::vector<double> x(start.begin(), start.begin() + state_dim);

  const auto analyze = [&](const std::vector<double>& p) {
    TraceStep step;
    step.point = p;
    const PointAnalysis pa = analyze_point(family, p, config);
    if (extended) {
      step.rank = bar_distribution(family, p, config).bar_rank;
      step.kernel_dim = m - step.rank;
    } else {
      step.rank = pa.rank;
      step.kernel_dim = pa.kernel_dim;
    }
    step.type = pa.type;
    return step;
  };

  LeafTrace trace;
  trace.steps.push_back(analyze(x));
  const int rank0 = trace.steps.front().rank;
  const LeafType type0 = trace.steps.front().type;

  int next_generator = 0;
  for (int s = 0; s < options.steps; ++s) {
    int chosen = -1;
    for (int probe = 0; probe < m; ++probe) {
      const int j = (next_generator + probe) % m;
      std::vector<double> v = family.frame[j].X.eval(x);
      if (extended) v.push_back(family.frame[j].f.eval(x));
      if (norm(v) >= 1e-12) {
        chosen = j;
        break;
      }
    }
    if (chosen >= 0) {
      const auto field = [&](const std::vector<double>& p) {
        std::vector<double> v = family.frame[chosen].X.eval(p);
        if (extended) v.push_back(family.frame[chosen].f.eval(p));
        return v;
      };
      rk4_step(x, options.dt, field);
      next_generator = (chosen + 1) % m;
    }
    trace.steps.push_back(analyze(x));
    if (trace.steps.back().rank != rank0) {
      trace.termination = TraceTermination::RankChanged;
      break;
    }
    if (trace.steps.back().type != type0) {
      trace.termination = TraceTermination::TypeChanged;
      break;
    }
  }
  return trace;
}

}  // namespace

LeafTrace trace_leaf(const DiracFamily& family, std::span<const double> start,
                     const TraceOptions& options, const FoliationConfig& config) {
  return trace_impl(family, start, options, config, false);
}

LeafTrace trace_bar_leaf(const DiracFamily& family, std::span<const double> start,
                         const TraceOptions& options,
                         const FoliationConfig& config) {
  return trace_impl(family, start, options, config, true);
}

RestrictionFibre restrict_to_submanifold(const DiracFamily& family,
                                         const Submanifold& sub,
                                         std::span<const double> domain_point,
                                         const FoliationConfig& config) {
  const int n = family.chart.dim();
  const int k = sub.domain.dim();
  const int m = static_cast<int>(family.frame.size());
  if (static_cast<int>(sub.embedding.size()) != n) {
    throw DomainError("embedding must provide every ambient coordinate");
  }
  if (static_cast<int>(domain_point.size()) < k) {
    throw DomainError("domain point has fewer coordinates than the chart");
  }

  std::vector<double> ambient(n);
  Eigen::MatrixXd jac(n, k);
  for (int i = 0; i < n; ++i) {
    ambient[i] = sub.embedding[i].eval(domain_point);
    for (int j = 0; j < k; ++j) {
      jac(i, j) = sub.embedding[i].partial(j).eval(domain_point);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd_jac(
      jac, Eigen::ComputeFullU | Eigen::ComputeThinV);
  if (rank_with_gap(svd_jac.singularValues(), config, "embedding jacobian") < k) {
    throw RankDrop("embedding jacobian drops rank at the point");
  }
  svd_jac.setThreshold(config.rank_tol);

  const Eigen::MatrixXd values = frame_values(family, ambient);
  const Eigen::MatrixXd a = values.topRows(n);

  // Coefficient kernel of the normal components: sections tangent to sub.
  Eigen::MatrixXd coeffs;
  if (n == k) {
    coeffs = Eigen::MatrixXd::Identity(m, m);
  } else {
    const Eigen::MatrixXd normal = svd_jac.matrixU().rightCols(n - k);
    const Eigen::MatrixXd cond = normal.transpose() * a;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd_cond(cond, Eigen::ComputeFullV);
    const int rank =
        rank_with_gap(svd_cond.singularValues(), config, "tangency conditions");
    coeffs = svd_cond.matrixV().rightCols(m - rank);
  }

  Eigen::MatrixXd restricted(2 * k + 2, coeffs.cols());
  for (Eigen::Index c = 0; c < coeffs.cols(); ++c) {
    const Eigen::VectorXd v = values * coeffs.col(c);
    const Eigen::VectorXd u =
        guarded_solve(svd_jac, jac, v.head(n), "restricted anchor");
    restricted.col(c).head(k) = u;
    restricted(k, c) = v(n);
    restricted.col(c).segment(k + 1, k) = jac.transpose() * v.segment(n + 1, n);
    restricted(2 * k + 1, c) = v(2 * n + 1);
  }

  const Eigen::MatrixXd basis = orthonormal_span(restricted);
  RestrictionFibre out;
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    out.basis.push_back(eigen_to_vector(basis.col(c)));
  }
  return out;
}

double subspace_distance(const std::vector<std::vector<double>>& a,
                         const std::vector<std::vector<double>>& b) {
  const std::size_t dim = !a.empty() ? a.front().size()
                        : !b.empty() ? b.front().size()
                                     : 0;
  const auto pack = [dim](const std::vector<std::vector<double>>& vs) {
    Eigen::MatrixXd m(dim, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (vs[j].size() != dim) {
        throw DomainError("subspace vectors have mismatched lengths");
      }
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = vs[j][i];
    }
    return m;
  };
  const Eigen::MatrixXd qa = orthonormal_span(pack(a));
  const Eigen::MatrixXd qb = orthonormal_span(pack(b));
  if (qa.cols() != qb.cols()) return 1.0;
  if (qa.cols() == 0) return 0.0;
  // Sine of the largest principal angle, via the residual of b outside a;
  // this stays accurate for nearly identical spans.
  const Eigen::MatrixXd residual = qb - qa * (qa.transpose() * qb);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(residual);
  return std::min(1.0, svd.singularValues().maxCoeff());
}

}  // namespace e1dirac

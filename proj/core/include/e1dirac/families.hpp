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

#ifndef E1DIRAC_FAMILIES_HPP_
#define E1DIRAC_FAMILIES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "e1dirac/chart.hpp"
#include "e1dirac/expr.hpp"
#include "e1dirac/sampling.hpp"
#include "e1dirac/sections.hpp"
#include "e1dirac/tensor.hpp"

namespace e1dirac {

// Geometric data defining a maximal isotropic family of the extended big
// bundle. Each kind has its own chart tensors and frame recipe.
enum class FamilyKind {
  DiracForm,            // graph of a 2-form
  DiracBivector,        // graph of a bivector
  Lcp,                  // 2-form twisted by a closed 1-form
  Precontact,           // differential of a 1-form plus its vertical shift
  Jacobi,               // bivector with a companion vector field
  HomogeneousPoisson,   // bivector with a homothety vector field
};

// Stable lowercase identifier, e.g. "lcp", "homogeneous_poisson".
const char* family_kind_name(FamilyKind kind);

// A maximal isotropic subbundle presented by a pointwise frame of dim+1
// sections. The frame coefficients are also the lift of the kind's model
// sections, so combine() doubles as the lift map.
struct DiracFamily {
  FamilyKind kind = FamilyKind::DiracForm;
  Chart chart;
  std::vector<E1Section> frame;

  // Defining tensors; slots a kind does not use stay zero.
  Form big_form;          // degree 2
  Form small_form;        // degree 1
  Multivector bivector;   // degree 2
  VectorField vector_part;
};

DiracFamily from_dirac_graph(const Form& omega);
DiracFamily from_dirac_graph(const Multivector& lambda);
DiracFamily from_lcp(const Form& omega, const Form& lee);
DiracFamily from_precontact(const Form& eta);
DiracFamily from_jacobi(const Multivector& lambda, const VectorField& reeb);
DiracFamily from_homogeneous_poisson(const Multivector& pi, const VectorField& homothety);

// Frame combination with symbolic coefficients (dim components plus one).
E1Section combine(const DiracFamily& family, std::span<const ScalarExpr> coeffs);

// Named structure-equation residuals as flat coefficient lists; every entry
// must vanish identically for the family to close under the bracket.
struct Residual {
  std::string name;
  std::vector<ScalarExpr> coeffs;
};
std::vector<Residual> structure_residuals(const DiracFamily& family);

// Numeric certificate: isotropy of the frame, the obstruction tensor along
// both evaluation paths, the structure residuals, and the frame's smallest
// singular value, all maximized (or minimized) over sampled points.
struct CertificationReport {
  double tol = 1e-8;
  int points = 0;
  double max_isotropy = 0.0;
  double max_t_direct = 0.0;
  double max_t_closed = 0.0;
  double max_t_mismatch = 0.0;
  double frame_min_sv = 0.0;
  std::vector<std::pair<std::string, double>> residuals;
  bool integrable = false;
};

CertificationReport certify(const DiracFamily& family, const SampleConfig& config,
                            double tol = 1e-8);

// Compare the extended bracket of lifted model sections against the lift of
// the kind's model bracket on seeded random pairs. Meaningful on families
// whose structure equations hold; the defect is the reported maximum over
// pairs and sample points.
struct ModelBracketReport {
  int pairs = 0;
  int points = 0;
  double max_defect = 0.0;
};

ModelBracketReport model_bracket_check(const DiracFamily& family, const SampleConfig& config,
                                       int pairs, std::uint64_t seed);

}  // namespace e1dirac

#endif  // E1DIRAC_FAMILIES_HPP_

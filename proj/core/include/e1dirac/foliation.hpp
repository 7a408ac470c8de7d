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

#ifndef E1DIRAC_FOLIATION_HPP_
#define E1DIRAC_FOLIATION_HPP_

#include <span>
#include <string>
#include <vector>

#include "e1dirac/families.hpp"
#include "e1dirac/sections.hpp"

namespace e1dirac {

// Pointwise leaf geometry of a family: the anchor images of the frame span
// the leaf tangent space, and the cocycle row decides the leaf flavour.

enum class LeafType { Precontact, Lcp };

const char* leaf_type_name(LeafType type);

struct FoliationConfig {
  double rank_tol = 1e-9;  // singular values below rank_tol * sigma_max drop
  double gap = 10.0;       // kept/dropped ratio below this refuses the rank
  double phi_tol = 1e-8;   // |phi . kernel| above this marks a precontact leaf
};

struct PointAnalysis {
  int rank = 0;        // dim of the leaf tangent space at the point
  int kernel_dim = 0;  // dim of the coefficient kernel, always >= 1
  LeafType type = LeafType::Lcp;
  double phi_kernel_max = 0.0;               // max |phi . c| over kernel basis
  std::vector<double> singular_values;       // of the anchor matrix
  std::vector<std::vector<double>> tangent;  // orthonormal leaf tangent basis
  std::vector<std::vector<double>> kernel;   // orthonormal coefficient kernel
};

// Rank and kernel of the anchor matrix at one point. Throws IllConditioned
// when the singular spectrum has no clean gap at the cutoff.
PointAnalysis analyze_point(const DiracFamily& family, std::span<const double> point,
                            const FoliationConfig& config = {});

struct BarAnalysis {
  int bar_rank = 0;  // rank of the anchor matrix extended by the phi row
  std::vector<double> singular_values;
};

// The anchor distribution extended by the cocycle row. Its rank exceeds the
// plain rank exactly on precontact leaves.
BarAnalysis bar_distribution(const DiracFamily& family, std::span<const double> point,
                             const FoliationConfig& config = {});

// Leaf data induced by the minus pairing, sampled on the tangent basis of
// analyze_point. Precontact leaves carry eta and big_form = d eta; lcp
// leaves carry lee and big_form = the leaf two-form.
struct InducedLeafStructure {
  LeafType type = LeafType::Lcp;
  int rank = 0;
  std::vector<std::vector<double>> tangent;
  std::vector<double> eta;                    // precontact only, size rank
  std::vector<double> lee;                    // lcp only, size rank
  std::vector<std::vector<double>> big_form;  // rank x rank, antisymmetric
};

InducedLeafStructure induced_structure(const DiracFamily& family,
                                       std::span<const double> point,
                                       const FoliationConfig& config = {});

// Closed form of the induced one-form when the leaf is the whole chart.
// Requires a frame whose anchor matrix has full symbolic rank with the
// cocycle row adjoined; throws SingularSystem otherwise.
Form induced_eta_symbolic(const DiracFamily& family);

struct TraceOptions {
  int steps = 200;
  double dt = 1e-2;
};

enum class TraceTermination { Completed, RankChanged, TypeChanged };

const char* trace_termination_name(TraceTermination termination);

struct TraceStep {
  std::vector<double> point;
  int rank = 0;
  int kernel_dim = 0;
  LeafType type = LeafType::Lcp;
};

struct LeafTrace {
  std::vector<TraceStep> steps;
  TraceTermination termination = TraceTermination::Completed;
};

// Integrates the leaf through the start point, cycling through the frame
// anchors as direction generators, one RK4 step each. Stops early when the
// rank or leaf type changes.
LeafTrace trace_leaf(const DiracFamily& family, std::span<const double> start,
                     const TraceOptions& options = {},
                     const FoliationConfig& config = {});

// Same but along the extended distribution on chart x time; the start point
// carries a trailing time coordinate and generators pick up a phi component.
LeafTrace trace_bar_leaf(const DiracFamily& family, std::span<const double> start,
                         const TraceOptions& options = {},
                         const FoliationConfig& config = {});

// A parametrised submanifold: coordinates of the ambient chart expressed in
// the domain chart variables.
struct Submanifold {
  Chart domain;
  std::vector<ScalarExpr> embedding;  // ambient_dim expressions
};

// Basis of the restricted fibre at one domain point, each vector laid out as
// (tangential part, f, pulled back covector, g) over the domain chart.
struct RestrictionFibre {
  std::vector<std::vector<double>> basis;
};

// Intersects the family fibre with the sections whose anchor is tangent to
// the submanifold, then maps anchors through the inverse Jacobian and
// covectors through the transposed Jacobian.
RestrictionFibre restrict_to_submanifold(const DiracFamily& family,
                                         const Submanifold& sub,
                                         std::span<const double> domain_point,
                                         const FoliationConfig& config = {});

// Sine of the largest principal angle between the spans; 1 when dims differ.
double subspace_distance(const std::vector<std::vector<double>>& a,
                         const std::vector<std::vector<double>>& b);

}  // namespace e1dirac

#endif  // E1DIRAC_FOLIATION_HPP_

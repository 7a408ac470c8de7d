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

#ifndef E1DIRAC_POISSONIZATION_HPP_
#define E1DIRAC_POISSONIZATION_HPP_

#include <vector>

#include "e1dirac/families.hpp"
#include "e1dirac/sampling.hpp"
#include "e1dirac/sections.hpp"

namespace e1dirac {

// Transport to the cylinder chart x time. Sections over the cylinder are
// represented on the base chart with coefficients free to mention the time
// variable, whose index is the chart dimension.

// psi((X, f) + (alpha, g)) = (X + f d/dt) + e^t (alpha + g dt), an ordinary
// tangent plus cotangent section on the extended chart.
TMSection psi_apply(const E1Section& section);

// Inverse transport; the section must live on base_chart extended by time.
E1Section psi_inverse(const TMSection& section, const Chart& base_chart);

// Bracket of time-dependent sections: the extended bracket taken fiberwise
// in t, plus transport along f d/dt, plus a pairing correction in the g slot.
// psi maps it to the ordinary Courant bracket on the cylinder.
E1Section bar_bracket(const E1Section& a, const E1Section& b);

// e^{-t} (L + d/dt ^ E) on the extended chart; a Poisson bivector exactly
// when (L, E) is a jacobi pair.
Multivector jacobi_poissonization(const Multivector& lam, const VectorField& e);

// psi image of the family frame.
std::vector<TMSection> psi_frame(const DiracFamily& family);

struct ClosureReport {
  int points = 0;
  double max_residual = 0.0;  // of [tilde, tilde] over the sampled cylinder
};

ClosureReport tilde_closure_check(const Multivector& tilde,
                                  const SampleConfig& config = {});

struct IsomorphismReport {
  int pairs = 0;
  int points = 0;
  double max_defect = 0.0;  // psi(bar bracket) vs Courant bracket of images
};

IsomorphismReport check_isomorphism(const DiracFamily& family,
                                    const SampleConfig& config, int pairs,
                                    unsigned seed);

struct CylinderLeafReport {
  int comparisons = 0;
  double max_defect = 0.0;  // cylinder leaf two-form vs base leaf prediction
};

// Compares the leaf two-form of the cylinder image against the prediction
// from the base leaf data: e^t (Phi(v1, v2) + tau1 eta(v2) - tau2 eta(v1))
// over precontact leaves and e^t Omega(v1, v2) over lcp leaves.
CylinderLeafReport cylinder_leaf_check(const DiracFamily& family,
                                       const SampleConfig& config, int pairs,
                                       unsigned seed);

}  // namespace e1dirac

#endif  // E1DIRAC_POISSONIZATION_HPP_

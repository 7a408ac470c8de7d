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

#ifndef E1DIRAC_SAMPLING_HPP_
#define E1DIRAC_SAMPLING_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "e1dirac/chart.hpp"
#include "e1dirac/expr.hpp"

namespace e1dirac {

// Deterministic random source. The uniform mapping is fixed here rather than
// delegated to std distributions, whose output is implementation-defined;
// equal seeds must give equal streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Uniform integer in [lo, hi], both ends included.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

// How evaluation points are drawn: a small lattice for coverage plus seeded
// uniform draws for genericity.
struct SampleConfig {
  int grid = 3;               // lattice points per axis
  int extra = 64;             // additional uniform points
  std::uint64_t seed = 42;
  double lo = -1.0;
  double hi = 1.0;
};

// Row-major lattice over [lo, hi]^dim followed by `extra` uniform points.
std::vector<std::vector<double>> sample_points(const Chart& chart, const SampleConfig& config);

// Random polynomial of total degree <= max_degree in nvars variables with
// small rational coefficients; smooth everywhere, safe to differentiate.
ScalarExpr random_polynomial(Rng& rng, int nvars, int max_degree = 2);

}  // namespace e1dirac

#endif  // E1DIRAC_SAMPLING_HPP_

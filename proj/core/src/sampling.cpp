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

#include "e1dirac/sampling.hpp"

#include <cmath>

namespace e1dirac {

std::vector<std::vector<double>> sample_points(const Chart& chart, const SampleConfig& config) {
  const int n = chart.dim();
  std::vector<std::vector<double>> points;
  if (config.grid > 0 && n > 0) {
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(config.grid);
    points.reserve(total + static_cast<std::size_t>(config.extra));
    std::vector<int> idx(n, 0);
    for (std::size_t k = 0; k < total; ++k) {
      std::vector<double> p(n);
      for (int i = 0; i < n; ++i) {
        double frac =
            config.grid == 1 ? 0.5 : static_cast<double>(idx[i]) / (config.grid - 1);
        p[i] = config.lo + (config.hi - config.lo) * frac;
      }
      points.push_back(std::move(p));
      // Row-major: the last axis varies fastest.
      for (int i = n - 1; i >= 0; --i) {
        if (++idx[i] < config.grid) break;
        idx[i] = 0;
      }
    }
  }
  Rng rng(config.seed);
  for (int k = 0; k < config.extra; ++k) {
    std::vector<double> p(n);
    for (int i = 0; i < n; ++i) p[i] = rng.uniform(config.lo, config.hi);
    points.push_back(std::move(p));
  }
  return points;
}

ScalarExpr random_polynomial(Rng& rng, int nvars, int max_degree) {
  // Enumerate monomials by total degree and keep a random subset with small
  // rational coefficients; always at least a constant term.
  std::vector<ScalarExpr> terms;
  std::vector<int> exponents(nvars, 0);
  // Odometer over exponent tuples with total degree <= max_degree.
  for (;;) {
    int total = 0;
    for (int e : exponents) total += e;
    if (total <= max_degree && rng.uniform_int(0, 2) != 0) {
      long long num = rng.uniform_int(-4, 4);
      if (num != 0) {
        long long den = rng.uniform_int(1, 3);
        std::vector<ScalarExpr> factors{ScalarExpr::rational(num, den)};
        for (int i = 0; i < nvars; ++i) {
          if (exponents[i] > 0) factors.push_back(ScalarExpr::variable(i).pow(exponents[i]));
        }
        terms.push_back(ScalarExpr::product(std::move(factors)));
      }
    }
    int i = nvars - 1;
    for (; i >= 0; --i) {
      if (++exponents[i] <= max_degree) break;
      exponents[i] = 0;
    }
    if (i < 0) break;
  }
  if (terms.empty()) return ScalarExpr::rational(1);
  return ScalarExpr::sum(std::move(terms)).simplified();
}

}  // namespace e1dirac

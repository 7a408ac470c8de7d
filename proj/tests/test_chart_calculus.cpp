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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "e1dirac/error.hpp"
#include "e1dirac/sampling.hpp"
#include "e1dirac/tensor.hpp"

using namespace e1dirac;

namespace {

const Chart kR2({"x", "y"});
const Chart kR3({"x", "y", "z"});

ScalarExpr var(int i) { return ScalarExpr::variable(i); }
ScalarExpr num(long long n, long long d = 1) { return ScalarExpr::rational(n, d); }

VectorField random_field(Rng& rng, const Chart& chart) {
  std::vector<ScalarExpr> comps;
  for (int i = 0; i < chart.dim(); ++i) comps.push_back(random_polynomial(rng, chart.dim(), 2));
  return VectorField(chart, std::move(comps));
}

Form random_form(Rng& rng, const Chart& chart, int degree) {
  Form out(chart, degree);
  for (int i = 0; i < out.size(); ++i) out.at(i) = random_polynomial(rng, chart.dim(), 2);
  return out;
}

Multivector random_multivector(Rng& rng, const Chart& chart, int degree) {
  Multivector out(chart, degree);
  for (int i = 0; i < out.size(); ++i) out.at(i) = random_polynomial(rng, chart.dim(), 2);
  return out;
}

std::vector<std::vector<double>> test_points(const Chart& chart, std::uint64_t seed = 5) {
  SampleConfig config;
  config.grid = 2;
  config.extra = 6;
  config.seed = seed;
  config.lo = -0.8;
  config.hi = 0.8;
  return sample_points(chart, config);
}

double fd_coeff(const Form& a, int flat, std::vector<double> p, int i, double h = 1e-5) {
  p[i] += h;
  double hi = a.at(flat).eval(p);
  p[i] -= 2 * h;
  double lo = a.at(flat).eval(p);
  return (hi - lo) / (2 * h);
}

// Full value of a degree-3 multivector on three 1-forms, via the determinant
// expansion; independent of component() sign handling.
double apply3(const Multivector& a, const std::vector<double>& va,
              const std::vector<double>& vb, const std::vector<double>& vc,
              const std::vector<double>& p) {
  std::vector<std::vector<int>> tuples = increasing_tuples(a.chart().dim(), 3);
  double acc = 0.0;
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    int i = tuples[r][0], j = tuples[r][1], k = tuples[r][2];
    double det = va[i] * (vb[j] * vc[k] - vb[k] * vc[j]) -
                 va[j] * (vb[i] * vc[k] - vb[k] * vc[i]) +
                 va[k] * (vb[i] * vc[j] - vb[j] * vc[i]);
    acc += a.at(static_cast<int>(r)).eval(p) * det;
  }
  return acc;
}

}  // namespace

TEST_CASE("tuple enumeration, ranking and sign") {
  auto t32 = increasing_tuples(3, 2);
  REQUIRE(t32.size() == 3);
  CHECK(t32[0] == std::vector<int>{0, 1});
  CHECK(t32[1] == std::vector<int>{0, 2});
  CHECK(t32[2] == std::vector<int>{1, 2});
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= 3 && k <= n; ++k) {
      auto tuples = increasing_tuples(n, k);
      REQUIRE(static_cast<long long>(tuples.size()) == binom(n, k));
      for (std::size_t r = 0; r < tuples.size(); ++r) {
        CHECK(tuple_rank(n, tuples[r]) == static_cast<int>(r));
      }
    }
  }
  std::vector<int> idx{2, 0, 1};
  CHECK(sort_sign(idx) == 1);  // even rotation
  idx = {1, 0};
  CHECK(sort_sign(idx) == -1);
  idx = {1, 1};
  CHECK(sort_sign(idx) == 0);
}

TEST_CASE("signed component access") {
  Form omega(kR2, 2);
  omega.at(0) = num(1);  // dx^dy
  CHECK(omega.component({0, 1}).eval({}) == doctest::Approx(1.0));
  CHECK(omega.component({1, 0}).eval({}) == doctest::Approx(-1.0));
  CHECK(omega.component({0, 0}).is_zero());

  Multivector tri(kR3, 3);
  tri.at(0) = var(0);
  CHECK(tri.component({2, 1, 0}).eval({3.0, 0.0, 0.0}) == doctest::Approx(-3.0));
  CHECK(tri.component({1, 2, 0}).eval({3.0, 0.0, 0.0}) == doctest::Approx(3.0));
}

TEST_CASE("degree above the dimension means identically zero") {
  Multivector top(kR2, 3);
  CHECK(top.size() == 0);
  CHECK(top.is_zero());
  CHECK(top.eval({0.5, 0.5}).empty());
  CHECK_THROWS_AS(Form(kR3, 4), UnsupportedDegree);
  CHECK_THROWS_AS(Form(kR3, -1), UnsupportedDegree);
}

TEST_CASE("lie bracket hand values") {
  // [x d/dx, d/dx] = -d/dx.
  VectorField a(kR2, {var(0), num(0)});
  VectorField b(kR2, {num(1), num(0)});
  VectorField ab = lie_bracket(a, b).simplified();
  CHECK(ab.comp(0).equals(num(-1)));
  CHECK(ab.comp(1).is_zero());

  // [d/dx + y d/dz, d/dy] = -d/dz.
  VectorField c(kR3, {num(1), num(0), var(1)});
  VectorField d(kR3, {num(0), num(1), num(0)});
  VectorField cd = lie_bracket(c, d).simplified();
  CHECK(cd.comp(0).is_zero());
  CHECK(cd.comp(1).is_zero());
  CHECK(cd.comp(2).equals(num(-1)));
}

TEST_CASE("lie bracket antisymmetry and jacobi identity") {
  Rng rng(11);
  auto pts = test_points(kR3);
  for (int c = 0; c < 10; ++c) {
    VectorField x = random_field(rng, kR3);
    VectorField y = random_field(rng, kR3);
    VectorField z = random_field(rng, kR3);
    VectorField anti = lie_bracket(x, y) + lie_bracket(y, x);
    VectorField jac = lie_bracket(lie_bracket(x, y), z) + lie_bracket(lie_bracket(y, z), x) +
                      lie_bracket(lie_bracket(z, x), y);
    for (const auto& p : pts) {
      for (double v : anti.eval(p)) CHECK(std::abs(v) < 1e-9);
      for (double v : jac.eval(p)) CHECK(std::abs(v) < 1e-9);
    }
  }
}

TEST_CASE("exterior differential hand values") {
  // d(x dy) = dx^dy.
  Form a(kR3, 1);
  a.at(1) = var(0);
  Form da = exterior_d(a).simplified();
  CHECK(da.component({0, 1}).equals(num(1)));
  CHECK(da.component({0, 2}).is_zero());
  CHECK(da.component({1, 2}).is_zero());

  // d(exp(z) dx^dy) = exp(z) dx^dy^dz.
  Form omega(kR3, 2);
  omega.at(0) = exp(var(2));
  Form domega = exterior_d(omega).simplified();
  CHECK((domega.at(0) - exp(var(2))).simplified().is_zero());

  // That 2-form also satisfies d(omega) = dz ^ omega.
  Form dz(kR3, 1);
  dz.at(2) = num(1);
  CHECK((domega - wedge(dz, omega)).simplified().is_zero());
}

TEST_CASE("exterior differential agrees with finite differences") {
  Rng rng(21);
  auto pts = test_points(kR3);
  for (int c = 0; c < 8; ++c) {
    Form a = random_form(rng, kR3, 1);
    Form da = exterior_d(a);
    for (const auto& p : pts) {
      // (da)_{ij} = d_i a_j - d_j a_i.
      auto tuples = increasing_tuples(3, 2);
      for (std::size_t r = 0; r < tuples.size(); ++r) {
        int i = tuples[r][0], j = tuples[r][1];
        double fd = fd_coeff(a, j, p, i) - fd_coeff(a, i, p, j);
        CHECK(da.at(static_cast<int>(r)).eval(p) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
      }
    }
  }
}

TEST_CASE("d squared vanishes") {
  Rng rng(31);
  auto pts = test_points(kR3);
  for (int c = 0; c < 8; ++c) {
    ScalarExpr f = random_polynomial(rng, 3, 2);
    Form ddf = exterior_d(differential(kR3, f)).simplified();
    CHECK(ddf.is_zero());
    Form a = random_form(rng, kR3, 1);
    Form dda = exterior_d(exterior_d(a));
    for (const auto& p : pts) {
      for (double v : dda.eval(p)) CHECK(std::abs(v) < 1e-9);
    }
  }
  CHECK_THROWS_AS(exterior_d(Form(kR3, 3)), UnsupportedDegree);
}

TEST_CASE("interior product hand values and contraction identity") {
  // i_{d/dx}(dx^dy) = dy.
  Form omega(kR2, 2);
  omega.at(0) = num(1);
  VectorField ex(kR2, {num(1), num(0)});
  Form iomega = interior(ex, omega).simplified();
  CHECK(iomega.at(0).is_zero());
  CHECK(iomega.at(1).equals(num(1)));

  Rng rng(41);
  auto pts = test_points(kR3);
  for (int c = 0; c < 8; ++c) {
    Form w = random_form(rng, kR3, 2);
    VectorField x = random_field(rng, kR3);
    VectorField y = random_field(rng, kR3);
    // (i_X w)(Y) = w(X, Y).
    ScalarExpr lhs = pair(interior(x, w), y);
    ScalarExpr rhs = contract2(w, x, y);
    for (const auto& p : pts) {
      CHECK(lhs.eval(p) == doctest::Approx(rhs.eval(p)).epsilon(1e-10).scale(1.0));
    }
  }
  CHECK_THROWS_AS(interior(ex, Form(kR2, 0)), UnsupportedDegree);
}

TEST_CASE("interior product of a 3-form fills two slots correctly") {
  Rng rng(43);
  auto pts = test_points(kR3);
  for (int c = 0; c < 6; ++c) {
    Form a3 = random_form(rng, kR3, 3);
    VectorField x = random_field(rng, kR3);
    VectorField y = random_field(rng, kR3);
    VectorField z = random_field(rng, kR3);
    // ((i_X A)(Y, Z) = A(X, Y, Z), evaluated via the determinant expansion.
    ScalarExpr lhs = contract2(interior(x, a3), y, z);
    for (const auto& p : pts) {
      Multivector as_mv(kR3, 3, a3.coeffs());
      double rhs = apply3(as_mv, x.eval(p), y.eval(p), z.eval(p), p);
      CHECK(lhs.eval(p) == doctest::Approx(rhs).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("lie derivative matches the direct coordinate formula") {
  Rng rng(51);
  auto pts = test_points(kR3);
  for (int c = 0; c < 6; ++c) {
    VectorField x = random_field(rng, kR3);

    // Degree 1: (L_X a)_i = X^l d_l a_i + a_l d_i X^l.
    Form a = random_form(rng, kR3, 1);
    Form lxa = lie_derivative(x, a);
    for (int i = 0; i < 3; ++i) {
      ScalarExpr direct;
      for (int l = 0; l < 3; ++l) {
        direct = direct + x.comp(l) * a.at(i).partial(l) + a.at(l) * x.comp(l).partial(i);
      }
      ScalarExpr diff = lxa.at(i) - direct;
      for (const auto& p : pts) CHECK(std::abs(diff.eval(p)) < 1e-9);
    }

    // Degree 2: (L_X w)_{ij} = X^l d_l w_{ij} + w_{lj} d_i X^l + w_{il} d_j X^l.
    Form w = random_form(rng, kR3, 2);
    Form lxw = lie_derivative(x, w);
    auto tuples = increasing_tuples(3, 2);
    for (std::size_t r = 0; r < tuples.size(); ++r) {
      int i = tuples[r][0], j = tuples[r][1];
      ScalarExpr direct;
      for (int l = 0; l < 3; ++l) {
        direct = direct + x.comp(l) * w.component({i, j}).partial(l) +
                 w.component({l, j}) * x.comp(l).partial(i) +
                 w.component({i, l}) * x.comp(l).partial(j);
      }
      ScalarExpr diff = lxw.at(static_cast<int>(r)) - direct;
      for (const auto& p : pts) CHECK(std::abs(diff.eval(p)) < 1e-9);
    }

    // Degree 0: L_X f = X(f).
    ScalarExpr f = random_polynomial(rng, 3, 2);
    Form f0(kR3, 0, {f});
    ScalarExpr diff0 = lie_derivative(x, f0).at(0) - apply(x, f);
    for (const auto& p : pts) CHECK(std::abs(diff0.eval(p)) < 1e-9);
  }
}

TEST_CASE("wedge products") {
  // dx ^ dy has coefficient 1 on (0,1).
  Form dx(kR2, 1), dy(kR2, 1);
  dx.at(0) = num(1);
  dy.at(1) = num(1);
  Form dxdy = wedge(dx, dy);
  CHECK(dxdy.at(0).simplified().equals(num(1)));

  Rng rng(61);
  auto pts = test_points(kR3);
  for (int c = 0; c < 6; ++c) {
    Form a = random_form(rng, kR3, 1);
    Form b = random_form(rng, kR3, 1);
    Form g = random_form(rng, kR3, 1);
    VectorField x = random_field(rng, kR3);
    VectorField y = random_field(rng, kR3);

    // Anticommutativity in degree 1 and associativity.
    Form anti = wedge(a, b) + wedge(b, a);
    Form assoc = wedge(wedge(a, b), g) - wedge(a, wedge(b, g));
    // (a^b)(X,Y) = a(X) b(Y) - a(Y) b(X).
    ScalarExpr evald = contract2(wedge(a, b), x, y) -
                       (pair(a, x) * pair(b, y) - pair(a, y) * pair(b, x));
    for (const auto& p : pts) {
      for (double v : anti.eval(p)) CHECK(std::abs(v) < 1e-9);
      for (double v : assoc.eval(p)) CHECK(std::abs(v) < 1e-9);
      CHECK(std::abs(evald.eval(p)) < 1e-9);
    }
  }
  CHECK_THROWS_AS(wedge(Form(kR3, 2), Form(kR3, 2)), UnsupportedDegree);
}

TEST_CASE("sharp and contract2 conventions") {
  // For L = d/dx ^ d/dy: sharp(dx) = d/dy, sharp(dy) = -d/dx.
  Multivector lam(kR2, 2);
  lam.at(0) = num(1);
  Form dx(kR2, 1), dy(kR2, 1);
  dx.at(0) = num(1);
  dy.at(1) = num(1);
  VectorField sdx = sharp(lam, dx).simplified();
  CHECK(sdx.comp(0).is_zero());
  CHECK(sdx.comp(1).equals(num(1)));
  VectorField sdy = sharp(lam, dy).simplified();
  CHECK(sdy.comp(0).equals(num(-1)));
  CHECK(sdy.comp(1).is_zero());

  // beta(sharp(L, alpha)) = L(alpha, beta) for random data.
  Rng rng(71);
  auto pts = test_points(kR3);
  for (int c = 0; c < 6; ++c) {
    Multivector l3 = random_multivector(rng, kR3, 2);
    Form alpha = random_form(rng, kR3, 1);
    Form beta = random_form(rng, kR3, 1);
    ScalarExpr diff = pair(beta, sharp(l3, alpha)) - contract2(l3, alpha, beta);
    for (const auto& p : pts) CHECK(std::abs(diff.eval(p)) < 1e-9);
  }
}

TEST_CASE("schouten bracket anchor values") {
  // [x d/dx, d/dx ^ d/dy] = -d/dx ^ d/dy.
  Multivector x_dx(kR2, 1);
  x_dx.at(0) = var(0);
  Multivector dxdy(kR2, 2);
  dxdy.at(0) = num(1);
  Multivector got = schouten(x_dx, dxdy).simplified();
  CHECK(got.at(0).equals(num(-1)));

  // The contact pair on R3: L = d/dx ^ d/dy - y d/dy ^ d/dz, E = d/dz
  // satisfies [L, L] = 2 E ^ L and [E, L] = 0.
  Multivector lam(kR3, 2);
  lam.at(0) = num(1);   // (0,1)
  lam.at(2) = -var(1);  // (1,2)
  Multivector reeb(kR3, 1);
  reeb.at(2) = num(1);
  Multivector lhs = schouten(lam, lam).simplified();
  Multivector rhs = (num(2) * wedge(reeb, lam)).simplified();
  REQUIRE(lhs.size() == 1);
  CHECK((lhs.at(0) - rhs.at(0)).simplified().is_zero());
  CHECK(lhs.at(0).equals(num(2)));
  CHECK(schouten(reeb, lam).simplified().is_zero());
}

TEST_CASE("schouten bracket graded symmetry") {
  Rng rng(81);
  auto pts = test_points(kR3);
  for (int c = 0; c < 6; ++c) {
    Multivector x = random_multivector(rng, kR3, 1);
    Multivector a = random_multivector(rng, kR3, 2);
    Multivector b = random_multivector(rng, kR3, 2);
    // Degrees (1,2): antisymmetric. Degrees (2,2): symmetric.
    Multivector anti = schouten(x, a) + schouten(a, x);
    Multivector sym = schouten(a, b) - schouten(b, a);
    for (const auto& p : pts) {
      for (double v : anti.eval(p)) CHECK(std::abs(v) < 1e-9);
      for (double v : sym.eval(p)) CHECK(std::abs(v) < 1e-9);
    }
  }
  CHECK_THROWS_AS(schouten(Multivector(kR3, 3), Multivector(kR3, 1)), UnsupportedDegree);
}

TEST_CASE("schouten bracket of a vector with a bivector is its lie derivative") {
  Rng rng(91);
  auto pts = test_points(kR3);
  for (int c = 0; c < 6; ++c) {
    Multivector xm = random_multivector(rng, kR3, 1);
    Multivector q = random_multivector(rng, kR3, 2);
    VectorField x = as_vector_field(xm);
    Multivector lxq = schouten(xm, q);
    ScalarExpr f = random_polynomial(rng, 3, 2);
    ScalarExpr g = random_polynomial(rng, 3, 2);
    // (L_X Q)(df, dg) = X(Q(df,dg)) - Q(d(Xf), dg) - Q(df, d(Xg)).
    Form df = differential(kR3, f);
    Form dg = differential(kR3, g);
    ScalarExpr direct = apply(x, contract2(q, df, dg)) -
                        contract2(q, differential(kR3, apply(x, f)), dg) -
                        contract2(q, df, differential(kR3, apply(x, g)));
    ScalarExpr diff = contract2(lxq, df, dg) - direct;
    for (const auto& p : pts) CHECK(std::abs(diff.eval(p)) < 1e-9);
  }
}

TEST_CASE("schouten self-bracket matches the cyclic poisson jacobiator") {
  Rng rng(101);
  auto pts = test_points(kR3);
  for (int c = 0; c < 8; ++c) {
    Multivector a = random_multivector(rng, kR3, 2);
    ScalarExpr f = random_polynomial(rng, 3, 2);
    ScalarExpr g = random_polynomial(rng, 3, 2);
    ScalarExpr h = random_polynomial(rng, 3, 2);
    auto br = [&](const ScalarExpr& u, const ScalarExpr& v) {
      return contract2(a, differential(kR3, u), differential(kR3, v));
    };
    // [A,A](df,dg,dh) = 2 ( {{f,g},h} + {{g,h},f} + {{h,f},g} ).
    ScalarExpr cyc = br(br(f, g), h) + br(br(g, h), f) + br(br(h, f), g);
    Multivector aa = schouten(a, a);
    Form df = differential(kR3, f);
    Form dg = differential(kR3, g);
    Form dh = differential(kR3, h);
    for (const auto& p : pts) {
      double lhs = apply3(aa, Form(df).eval(p), Form(dg).eval(p), Form(dh).eval(p), p);
      CHECK(lhs == doctest::Approx(2.0 * cyc.eval(p)).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("schouten bracket by polarization") {
  Rng rng(111);
  auto pts = test_points(kR3);
  for (int c = 0; c < 6; ++c) {
    Multivector a = random_multivector(rng, kR3, 2);
    Multivector b = random_multivector(rng, kR3, 2);
    Multivector apb = a + b;
    Multivector pol = schouten(apb, apb) - schouten(a, a) - schouten(b, b);
    Multivector two_ab = num(2) * schouten(a, b);
    Multivector diff = pol - two_ab;
    for (const auto& p : pts) {
      for (double v : diff.eval(p)) CHECK(std::abs(v) < 1e-9);
    }
  }
}

TEST_CASE("poisson bivectors have vanishing self-bracket") {
  // Constant bivector.
  Multivector pi(kR3, 2);
  pi.at(0) = num(1);
  CHECK(schouten(pi, pi).simplified().is_zero());

  // A product of a vector pair with commuting factors: z d/dx ^ d/dy
  // + x d/dy ^ d/dz = (z d/dx - x d/dz) ^ d/dy, which is Poisson.
  Multivector prod(kR3, 2);
  prod.at(0) = var(2);
  prod.at(2) = var(0);
  CHECK(schouten(prod, prod).simplified().is_zero());

  // Breaking the pairing breaks the identity: y d/dx ^ d/dy + x d/dy ^ d/dz
  // has [B,B] = 2x d/dx ^ d/dy ^ d/dz.
  Multivector bad(kR3, 2);
  bad.at(0) = var(1);
  bad.at(2) = var(0);
  Multivector bb = schouten(bad, bad).simplified();
  REQUIRE(bb.size() == 1);
  CHECK((bb.at(0) - num(2) * var(0)).simplified().is_zero());

  // On a 2d chart every bivector is Poisson; the top residual has no slots.
  Multivector any2(kR2, 2);
  any2.at(0) = exp(var(0)) * var(1);
  CHECK(schouten(any2, any2).size() == 0);
}

TEST_CASE("coefficient-wise partial freezes the other slots") {
  Chart ext = kR2.time_extended();
  Form a(ext, 1);
  a.at(0) = var(2) * var(0);  // t x dx
  Form dt_a = a.partial(2).simplified();
  CHECK(dt_a.at(0).equals(var(0)));
  CHECK(dt_a.at(1).is_zero());
  CHECK(dt_a.at(2).is_zero());
}

TEST_CASE("chart mismatch is rejected") {
  Form a(kR2, 1), b(kR3, 1);
  CHECK_THROWS_AS(a + b, ChartMismatch);
  VectorField x(kR2), y(kR3);
  CHECK_THROWS_AS(lie_bracket(x, y), ChartMismatch);
  CHECK_THROWS_AS(interior(x, b), ChartMismatch);
}

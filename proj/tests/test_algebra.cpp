// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <random>

#include "algebra.hpp"
#include "golden.hpp"
#include "prec_real.hpp"

using namespace lfm;

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  // falling-factorial convention agrees with (n)_m/m! for negative n
  for (long n = -6; n < 0; ++n)
    for (long m = 0; m < 6; ++m) CHECK(binomial(n, m) * factorial(m) == falling_factorial(ExactInt(n), m));
}

TEST_CASE("falling factorial") {
  ExactPoly k = ExactPoly::variable();
  CHECK(falling_factorial(k + ExactPoly(2), 1) == k + ExactPoly(2));
  CHECK(falling_factorial(ExactInt(5), 3) == 60);
  CHECK(falling_factorial(k, 2).eval(4) == 12);
  CHECK(falling_factorial(k, 0) == ExactPoly(1));
}

TEST_CASE("interpolate") {
  ExactPoly p = interpolate({{0, 1}, {1, 2}, {2, 5}});
  CHECK(p == ExactPoly(std::vector<ExactRational>{1, 0, 1}));
  CHECK(interpolate({{7, 3}}) == ExactPoly(3));
  ExactPoly k = ExactPoly::variable();
  ExactPoly target = k * (k + ExactPoly(1));
  std::vector<std::pair<ExactRational, ExactRational>> pts;
  for (int x = 0; x < 3; ++x) pts.emplace_back(x, target.eval(x));
  CHECK(interpolate(pts) == target);
  CHECK_THROWS_WITH_AS(interpolate({{1, 2}, {1, 3}}), "degenerate nodes", InvalidArgument);
}

TEST_CASE("interpolation recovers random polynomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-50, 50);
  for (int trial = 0; trial < 20; ++trial) {
    int deg = trial % 8;
    std::vector<ExactRational> c(deg + 1);
    for (auto& x : c) x = ExactRational(coef(rng), 1 + (coef(rng) + 50) % 7);
    ExactPoly p(c);
    std::vector<std::pair<ExactRational, ExactRational>> pts;
    for (int x = -3; x <= deg - 3; ++x) pts.emplace_back(x, p.eval(x));
    CHECK(interpolate(pts) == p);
  }
}

TEST_CASE("poly eval") {
  ExactPoly k = ExactPoly::variable();
  CHECK((k + ExactPoly(1)).eval(3) == 4);
  CHECK(ExactPoly().eval(10) == 0);
  ExactPoly p21 = parse_poly("(1/3) (k + 2) (k^2 + k - 3)");
  CHECK(p21.eval(3) == 15);
}

TEST_CASE("polynomial arithmetic") {
  ExactPoly k = ExactPoly::variable();
  ExactPoly a = (k - ExactPoly(1)) * (k + ExactPoly(2));
  auto [q, r] = divmod(a, k + ExactPoly(2));
  CHECK(q == k - ExactPoly(1));
  CHECK(r.is_zero());
  CHECK(a.shifted(1) == k * (k + ExactPoly(3)));
  CHECK(a.to_string() == "k^2 + k - 2");
  CHECK((a / ExactRational(2)).to_string() == "1/2*k^2 + 1/2*k - 1");
}

TEST_CASE("parse_poly forms") {
  ExactPoly k = ExactPoly::variable();
  CHECK(parse_poly("(k)_2/2") == k * (k - ExactPoly(1)) / ExactRational(2));
  CHECK(parse_poly("-(k-1)(k+2)(k+1)") == -((k - ExactPoly(1)) * (k + ExactPoly(2)) * (k + ExactPoly(1))));
  CHECK(parse_poly("(k + 4)^2") == (k + ExactPoly(4)) * (k + ExactPoly(4)));
  CHECK(parse_poly("3k^2+3k-40") == ExactPoly(std::vector<ExactRational>{-40, 3, 3}));
  CHECK(parse_poly("0").is_zero());
  CHECK_THROWS_AS(parse_poly("(k + 1"), InvalidArgument);
}

TEST_CASE("determinants") {
  IntMatrix m = {{2, 0, 1}, {1, 3, 2}, {1, 1, 2}};
  CHECK(det_bareiss(m) == 6);
  IntMatrix swap = {{0, 1}, {1, 0}};
  CHECK(det_bareiss(swap) == -1);
  IntMatrix sing = {{1, 2}, {2, 4}};
  CHECK(det_bareiss(sing) == 0);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int n = 1; n <= 6; ++n) {
    IntMatrix a(n, std::vector<ExactInt>(n));
    RationalMatrix b(n, std::vector<ExactRational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a[i][j] = d(rng);
        b[i][j] = ExactRational(a[i][j]);
      }
    CHECK(ExactRational(det_bareiss(a)) == det_rational(b));
  }
}

TEST_CASE("rational strings") {
  CHECK(rational_to_string(ExactRational(3, 6)) == "1/2");
  CHECK(rational_to_string(ExactRational(-4)) == "-4/1");
  CHECK(rational_from_string("6/4") == ExactRational(3, 2));
  CHECK_THROWS_AS(rational_from_string("x"), InvalidArgument);
}

TEST_CASE("PrecReal") {
  PrecReal a(ExactRational(1, 3), 256);
  PrecReal b(1L, 128);
  CHECK((a + b).precision() == 128);
  CHECK(a.precision() == 256);
  PrecReal c = PrecReal::parse(a.to_exact_string(), 256);
  CHECK(c == a);
  CHECK(a.to_string(5) == "3.3333e-01");
  PrecReal acc(0L, 256);
  fma_acc(acc, a, PrecReal(3L, 256));
  CHECK(relative_difference(acc, PrecReal(1L, 256)) < 1e-70);
  CHECK_THROWS_AS(log(PrecReal(-1L, 64)), DomainError);
  PrecReal g = PrecReal::euler_gamma(256);
  CHECK(g.to_string(17) == "5.7721566490153286e-01");
}

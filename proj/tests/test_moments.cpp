// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "golden.hpp"
#include "moments.hpp"
#include "nlambda.hpp"

using namespace lfm;

namespace {

constexpr mpfr_prec_t kPrec = 128;
constexpr long kCutoff = 1000;

}  // namespace

TEST_CASE("leading factors") {
  CHECK(c0_factor(Family::QuadraticPlus, 1) == ExactRational(1, 2));
  CHECK(c0_factor(Family::QuadraticMinus, 2) == ExactRational(1, 24));
  CHECK(c0_factor(Family::Elliptic11a, 1) == 2);
  CHECK_THROWS_AS(c0_factor(Family::QuadraticPlus, 0), InvalidArgument);
}

TEST_CASE("identities hold to k = 30") {
  IdentityReport rep = identity_checks(30);
  CHECK(rep.ok);
  CHECK(rep.checked == 60);
  CHECK(rep.failures.empty());
  CHECK_THROWS_AS(identity_checks(31), InvalidArgument);
}

TEST_CASE("density factors") {
  PrecReal pi = PrecReal::pi(kPrec);
  CHECK(relative_difference(density_factor(Family::QuadraticPlus, kPrec), PrecReal(3L, kPrec) / (pi * pi)) < 1e-35);
  CHECK(relative_difference(density_factor(Family::Elliptic11a, kPrec),
                            PrecReal(ExactRational(15, 11), kPrec) / (pi * pi)) < 1e-35);
}

TEST_CASE("plus and minus share the leading coefficient") {
  for (int k = 1; k <= 3; ++k) {
    ValueWithError p = c0(Family::QuadraticPlus, k, kPrec, kCutoff);
    ValueWithError m = c0(Family::QuadraticMinus, k, kPrec, kCutoff);
    CHECK(p.value == m.value);
    CHECK(p.err == m.err);
  }
}

TEST_CASE("polynomial shapes") {
  auto q = q_polynomial(Family::QuadraticPlus, 3, kPrec, kCutoff);
  CHECK(q.degree == 6);
  CHECK(q.coefficients.size() == 7);
  CHECK(q.complete());
  auto e1 = q_polynomial(Family::Elliptic11a, 1, kPrec, kCutoff);
  CHECK(e1.degree == 0);
  CHECK(e1.coefficients.size() == 1);
  auto e3 = q_polynomial(Family::Elliptic11a, 3, kPrec, kCutoff);
  CHECK(e3.coefficients.size() == 4);
  auto part = q_polynomial(Family::QuadraticMinus, 4, kPrec, kCutoff, 2);
  CHECK(part.coefficients.size() == 3);
  CHECK_FALSE(part.complete());
  CHECK_THROWS_AS(c_coeff(Family::QuadraticMinus, 4, 2, kPrec, kCutoff), InvalidArgument);
}

TEST_CASE("first coefficients against the reference table") {
  // The reference values were computed with a far larger prime cutoff; at 10^3
  // the tail acceleration still reaches them.
  auto table = load_value_table(data_dir() + "/c_minus.txt");
  for (const auto& g : table) {
    if (g.k > 2) continue;
    ValueWithError v = c_coeff(Family::QuadraticMinus, g.r, g.k, kPrec, kCutoff);
    CAPTURE(g.k);
    CAPTURE(g.r);
    CHECK(relative_difference(v.value, PrecReal::parse(g.text, kPrec)) < 1e-15);
  }
}

TEST_CASE("residue route agrees with the assembled coefficients") {
  for (Family f : {Family::QuadraticMinus, Family::QuadraticPlus, Family::Elliptic11a}) {
    const int top = family_spec(f).elliptic() ? 3 : 2;
    for (int k = 1; k <= top; ++k) {
      auto o = residue_oracle(f, k, kPrec, kCutoff);
      auto q = q_polynomial(f, k, kPrec, kCutoff);
      REQUIRE(o.coefficients.size() == q.coefficients.size());
      for (int r = 0; r <= q.degree; ++r) {
        CAPTURE(family_name(f));
        CAPTURE(k);
        CAPTURE(r);
        CHECK(relative_difference(o.coefficients[r], q.coefficients[r]) < 1e-30);
      }
    }
  }
  CHECK_THROWS_AS(residue_oracle(Family::QuadraticMinus, 4, kPrec, kCutoff), InvalidArgument);
}

TEST_CASE("elliptic determinant route") {
  for (int k = 1; k <= 4; ++k)
    for (int r = 0; r <= std::min(3, k * (k - 1) / 2); ++r) {
      ValueWithError a = c_coeff(Family::Elliptic11a, r, k, kPrec, kCutoff);
      ValueWithError b = elliptic_c_e_route(r, k, kPrec, kCutoff);
      CAPTURE(k);
      CAPTURE(r);
      CHECK(relative_difference(a.value, b.value) < 1e-30);
    }
}

TEST_CASE("elliptic determinant sums reproduce N at k - 1 up to a power of two") {
  for (int w = 0; w <= 4; ++w)
    for (const auto& l : partitions_of(w))
      for (long k = std::max(2, l.length()); k <= 6; ++k) {
        ExactRational n = n_lambda(l).eval(ExactRational(k - 1));
        ExactRational e = elliptic_e_sum(l, k);
        // c0 for the elliptic family carries 2^{C(k-1,2)} and the N route a further 2^{-r}.
        ExactRational scale(ExactInt(1) << static_cast<unsigned long>((k - 1) * (k - 2) / 2),
                            ExactInt(1) << static_cast<unsigned long>(w));
        scale.canonicalize();
        CAPTURE(l.to_string());
        CAPTURE(k);
        CHECK(e == scale * n);
      }
}

TEST_CASE("averaged transform examples") {
  auto one = averaged_exact({ExactRational(1)});
  CHECK(one.poly == std::vector<ExactRational>{1});
  CHECK(one.remainder == -1);
  auto x = averaged_exact({ExactRational(0), ExactRational(1)});
  CHECK(x.poly == std::vector<ExactRational>{-1, 1});
  CHECK(x.remainder == 1);
  auto x2 = averaged_exact({ExactRational(0), ExactRational(0), ExactRational(1)});
  CHECK(x2.poly == std::vector<ExactRational>{2, -2, 1});
  CHECK(x2.remainder == -2);
}

TEST_CASE("averaging keeps degree and leading coefficient") {
  auto q = q_polynomial(Family::QuadraticMinus, 2, kPrec, kCutoff);
  auto av = averaged_polynomial(q);
  CHECK(av.poly.degree == q.degree);
  CHECK(av.poly.coefficients[0] == q.coefficients[0]);
  auto part = q_polynomial(Family::QuadraticMinus, 4, kPrec, kCutoff, 1);
  CHECK_THROWS_AS(averaged_polynomial(part), InvalidArgument);
}

// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "arithfactors.hpp"
#include "primes.hpp"
#include "special.hpp"

using namespace lfm;

namespace {

constexpr mpfr_prec_t kPrec = 128;

double rel(const PrecReal& a, const PrecReal& b) { return relative_difference(a, b); }

}  // namespace

TEST_CASE("family metadata") {
  CHECK(parse_family("qd-plus") == Family::QuadraticPlus);
  CHECK(parse_family("qd-minus") == Family::QuadraticMinus);
  CHECK(parse_family("e11") == Family::Elliptic11a);
  CHECK_THROWS_AS(parse_family("e37"), InvalidArgument);
  CHECK(family_spec(Family::QuadraticPlus).a == 0);
  CHECK(family_spec(Family::QuadraticMinus).a == 1);
  CHECK(family_spec(Family::Elliptic11a).conductor == 11);
  CHECK(family_name(Family::Elliptic11a) == "e11");
  CHECK(moment_degree(Family::QuadraticMinus, 3) == 6);
  CHECK(moment_degree(Family::Elliptic11a, 3) == 3);
  CHECK(moment_degree(Family::Elliptic11a, 1) == 0);
}

TEST_CASE("gamma factor series") {
  for (int a = 0; a <= 1; ++a) {
    Family f = a ? Family::QuadraticMinus : Family::QuadraticPlus;
    auto g = gamma_series(f, 4, kPrec);
    PrecReal pi = PrecReal::pi(kPrec);
    PrecReal want = -log(pi) / 2L + polygamma(0, ExactRational(1 + 2 * a, 4), kPrec) / 2L;
    CHECK(g[0].is_zero());
    CHECK(rel(g[1], want) < 1e-35);
  }
  auto e = gamma_series(Family::Elliptic11a, 4, kPrec);
  CHECK(e[0].is_zero());
}

TEST_CASE("zeta log series") {
  auto z = zeta_log_series(3, kPrec);
  CHECK(z[0].is_zero());
  CHECK(rel(z[1], stieltjes(0, kPrec)) < 1e-35);
}

TEST_CASE("local factor at the bad prime") {
  auto set = MonomialSet::total_degree(1, 2);
  auto L = local_factor_log_series(Family::Elliptic11a, 11, 1, set, kPrec);
  PrecReal p(11L, kPrec);
  PrecReal want = log(p) / p / (PrecReal(1L, kPrec) + PrecReal(1L, kPrec) / p);
  CHECK(rel(L.coeff({1}), want) < 1e-35);
}

TEST_CASE("local factors are symmetric in the variables") {
  auto set = MonomialSet::total_degree(3, 4);
  for (Family f : {Family::QuadraticPlus, Family::Elliptic11a}) {
    auto L = local_factor_log_series(f, 7, 4, set, kPrec);
    for (std::size_t i = 0; i < set->size(); ++i) {
      Exponent e = set->exponent_vec(i);
      Exponent s{e[2], e[0], e[1]};
      CHECK(rel(L[i], L.coeff(s)) < 1e-35);
    }
  }
}

TEST_CASE("prime power tails match direct summation") {
  const auto& lo = prime_power_tail(2, 4, 1000, kPrec);
  const auto& hi = prime_power_tail(2, 4, 100000, kPrec);
  auto primes = primes_up_to(100000);
  for (int n = 0; n <= 2; ++n)
    for (int j = 2; j <= 4; ++j) {
      PrecReal direct(kPrec + 32);
      for (long p : primes) {
        if (p <= 1000) continue;
        PrecReal pp(p, kPrec + 32);
        direct += pow(log(pp), n) / pow(pp, j);
      }
      CAPTURE(n);
      CAPTURE(j);
      CHECK(rel(lo[n][j] - hi[n][j], direct) < 1e-30);
    }
}

TEST_CASE("prime sums are stable under a larger cutoff") {
  auto set = MonomialSet::partition_dominated(2, 3);
  PrimeSum a = prime_sum(Family::QuadraticMinus, 2, set, kPrec, 2000);
  PrimeSum b = prime_sum(Family::QuadraticMinus, 2, set, kPrec, 4000);
  for (std::size_t i = 0; i < set->size(); ++i) {
    PrecReal d = abs(a.value[i] - b.value[i]).with_precision(64);
    PrecReal bound = a.err[i] + b.err[i] + pow2(-100, 64) * abs(a.value[i]).with_precision(64);
    CHECK(d <= bound);
  }
}

TEST_CASE("unreachable precision is reported") {
  auto set = MonomialSet::total_degree(1, 1);
  try {
    prime_sum(Family::QuadraticMinus, 1, set, 2048, 100);
    FAIL("expected a precision error");
  } catch (const PrecisionError& e) {
    CHECK(e.achievable_digits() > 0);
    CHECK(e.achievable_digits() < 2048 * 0.30103);
  }
}

TEST_CASE("b table basics") {
  BCoeffTable t = b_coeffs(Family::QuadraticPlus, 2, 2, kPrec, 1000);
  CHECK(t.at(Partition()) == PrecReal(1L, kPrec));
  CHECK(t.error_at(Partition()).is_zero());
  CHECK(t.lambdas.size() == 4);
  CHECK_THROWS_AS(t.at(Partition{3}), InvalidArgument);
  CHECK(t.a_k.value > PrecReal(0L, kPrec));
}

TEST_CASE("closed form b oracles") {
  for (int k = 1; k <= 2; ++k)
    for (int a = 0; a <= 1; ++a) {
      Family f = a ? Family::QuadraticMinus : Family::QuadraticPlus;
      BCoeffTable t = b_coeffs(f, k, 2, kPrec, 1000);
      ValueWithError b1 = b1_oracle(k, a, kPrec, 1000);
      CHECK(rel(t.at(Partition{1}), b1.value) < 1e-25);
      if (k >= 2) {
        ValueWithError b11 = b11_oracle(k, a, kPrec, 1000);
        CHECK(rel(t.at(Partition{1, 1}), b11.value) < 1e-25);
      }
    }
}

TEST_CASE("quadratic signs share a_k") {
  ValueWithError p = arithmetic_ak(Family::QuadraticPlus, 3, kPrec, 1000);
  ValueWithError m = arithmetic_ak(Family::QuadraticMinus, 3, kPrec, 1000);
  CHECK(p.value == m.value);
  // a_1 = prod_p (1 - 1/(p(p+1))); the product to 10^6 leaves a tail below 10^-7.
  PrecReal direct(1L, 64);
  for (long p : primes_up_to(1000000)) direct *= PrecReal(1L, 64) - PrecReal(1L, 64) / PrecReal(p * (p + 1), 64);
  CHECK(rel(arithmetic_ak(Family::QuadraticMinus, 1, kPrec, 1000).value, direct) < 2e-7);
}

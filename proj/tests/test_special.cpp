// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "primes.hpp"
#include "special.hpp"

using namespace lfm;

namespace {

// Reference digits from an independent arbitrary-precision package.
void close(const PrecReal& got, const char* want, double tol = 1e-38) {
  INFO(got.to_string(40), " vs ", want);
  CHECK(relative_difference(got, PrecReal::parse(want, 256)) < tol);
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  const auto& b = bernoulli_numbers(12);
  CHECK(b[0] == 1);
  CHECK(b[1] == ExactRational(-1, 2));
  CHECK(b[2] == ExactRational(1, 6));
  CHECK(b[3] == 0);
  CHECK(b[12] == ExactRational(-691, 2730));
}

TEST_CASE("stieltjes constants") {
  close(stieltjes(0, 256), "0.5772156649015328606065120900824024310422");
  close(stieltjes(1, 256), "-0.07281584548367672486058637587490131913774");
  close(stieltjes(2, 256), "-0.009690363192872318484530386035212529359066");
  close(stieltjes(5, 256), "0.0007933238173010627017533348774444448307315");
  close(stieltjes(10, 256), "0.0002053328149090647946837222892370653029599");
  close(stieltjes(20, 256), "0.0004663435615115594494005948244335505251131");
  CHECK(stieltjes(0, 256) == PrecReal::euler_gamma(256));
  auto all = stieltjes_all(5, 256);
  REQUIRE(all.size() == 6);
  CHECK(relative_difference(all[5], stieltjes(5, 256)) < 1e-70);
}

TEST_CASE("polygamma") {
  close(polygamma(0, ExactRational(1, 4), 256), "-4.227453533376265408089530146096683577367");
  close(polygamma(0, ExactRational(3, 4), 256), "-1.08586087978647216962688676281718069317");
  close(polygamma(2, ExactRational(1, 4), 256), "-129.3277399375369203333379671788439898873");
  close(polygamma(1, ExactRational(3, 4), 256), "2.541879647671606498397662880417078249121");
}

TEST_CASE("hurwitz and riemann zeta") {
  close(hurwitz_series(3, ExactRational(1, 2), 1, 256)[0], "8.414398322117159997798167130580149935355");
  close(zeta_value(5, 256), "1.036927755143369926331365486457034168057");
  // zeta(1 + eps) - 1/eps = gamma_0 - gamma_1 eps + ...
  auto s = hurwitz_series(1, ExactRational(1), 3, 256);
  CHECK(relative_difference(s[0], stieltjes(0, 256)) < 1e-70);
  CHECK(relative_difference(s[1], -stieltjes(1, 256)) < 1e-70);
}

TEST_CASE("primes and mobius") {
  auto p = primes_up_to(100);
  CHECK(p.size() == 25);
  CHECK(p.front() == 2);
  CHECK(p.back() == 97);
  CHECK(primes_up_to(10000).size() == 1229);
  CHECK(is_prime(9973));
  CHECK_FALSE(is_prime(9971));
  auto mu = mobius_table(30);
  CHECK(mu[1] == 1);
  CHECK(mu[4] == 0);
  CHECK(mu[6] == 1);
  CHECK(mu[30] == -1);
}

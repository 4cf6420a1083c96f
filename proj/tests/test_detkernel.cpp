// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "detkernel.hpp"
#include "golden.hpp"

using namespace lfm;

namespace {

ExactRational pow2(long e) {
  ExactInt p = ExactInt(1) << static_cast<unsigned long>(e < 0 ? -e : e);
  return e < 0 ? ExactRational(ExactInt(1), p) : ExactRational(p);
}

// P_lambda recovered from the determinant at enough integer points.
ExactPoly interpolated_p(const Partition& l) {
  std::vector<std::pair<ExactRational, ExactRational>> pts;
  long k0 = std::max(l.length(), l.largest());
  for (long k = k0; k <= k0 + l.weight(); ++k) {
    ExactRational d(d_lambda(l, k));
    pts.emplace_back(k, d / pow2(k * (k - 1) / 2 - l.weight()));
  }
  return interpolate(pts);
}

}  // namespace

TEST_CASE("d_lambda examples") {
  CHECK(d_lambda(Partition(), 4) == 64);
  CHECK(d_lambda(Partition{1}, 3) == 16);
  CHECK(d_lambda(Partition{1, 1}, 2) == 1);
  CHECK_THROWS_AS(d_lambda(Partition{1, 1, 1}, 2), InvalidArgument);
}

TEST_CASE("p_lambda examples") {
  ExactPoly k = ExactPoly::variable();
  CHECK(p_lambda(Partition{1}, PRoute::Y) == k + ExactPoly(1));
  CHECK(p_lambda(Partition{2, 1}, PRoute::Y) == parse_poly("(1/3)(k+2)(k^2+k-3)"));
  CHECK(p_lambda(Partition(), PRoute::Y) == ExactPoly(1));
  CHECK(p_lambda(Partition{1}, PRoute::Z) == k + ExactPoly(1));
  CHECK(p_lambda(Partition{1, 1, 1}, PRoute::Z) == parse_poly("(1/6)(k-2)(k-1)(k+3)"));
  CHECK(p_lambda(Partition{3, 2}, PRoute::Z) == parse_poly("(1/24)(k+1)(k+2)(k+3)(k^2+k-8)"));
}

TEST_CASE("routes agree with the interpolated determinant") {
  for (const auto& l : partitions_up_to(5)) {
    CAPTURE(l.to_string());
    ExactPoly ref = interpolated_p(l);
    CHECK(p_lambda(l, PRoute::Y) == ref);
    CHECK(p_lambda(l, PRoute::Z) == ref);
  }
}

TEST_CASE("degree and box sizes") {
  for (const auto& l : partitions_up_to(6)) {
    CHECK(p_lambda(l).degree() == l.weight());
    CHECK(p_lambda_box_size(l, PRoute::Auto) <= p_lambda_box_size(l, PRoute::Y));
    CHECK(p_lambda_box_size(l, PRoute::Y) == p_lambda_box_size(l.conjugate(), PRoute::Z));
  }
}

TEST_CASE("e_lambda at small k") {
  CHECK(e_lambda(Partition(), 1) == 1);
  CHECK(e_lambda(Partition{1}, 1) == 1);
}

TEST_CASE("golden P table") {
  auto rows = load_poly_table(data_dir() + "/p_lambda.txt");
  CHECK(rows.size() == 44);
  for (const auto& row : rows) {
    CAPTURE(row.lambda.to_string());
    CHECK(p_lambda(row.lambda) == row.value);
  }
}

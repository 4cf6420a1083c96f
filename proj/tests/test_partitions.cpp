// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <set>

#include "partitions.hpp"

using namespace lfm;

namespace {

// Standard Young tableaux count by the hook length formula.
ExactInt hook_count(const Partition& l) {
  Partition c = l.conjugate();
  ExactInt hooks = 1;
  for (int i = 0; i < l.length(); ++i)
    for (int j = 0; j < l.part(i); ++j) hooks *= (l.part(i) - j - 1) + (c.part(j) - i - 1) + 1;
  return factorial(l.weight()) / hooks;
}

// Partition counts via the standard recurrence p(n, m) on largest part.
long partition_count(int n, int m) {
  if (n == 0) return 1;
  if (m == 0) return 0;
  return partition_count(n, m - 1) + (n >= m ? partition_count(n - m, m) : 0);
}

}  // namespace

TEST_CASE("enumeration") {
  auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(7).size() == 15);
  for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(partition_count(n, n)));
  auto p3 = partitions_of(3);
  CHECK(p3[0] == Partition{3});
  CHECK(p3[1] == Partition{2, 1});
  CHECK(p3[2] == Partition{1, 1, 1});
  CHECK(partitions_up_to(7).size() == 45);
  CHECK(partitions_up_to(10, 2).size() == 36);
}

TEST_CASE("canonical form") {
  CHECK(Partition({3, 1, 0, 0}) == Partition{3, 1});
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Partition({2, -1}), InvalidArgument);
  CHECK(Partition::parse("[2, 1, 1]") == Partition{2, 1, 1});
  CHECK(Partition::parse("[]").empty());
  CHECK(Partition{4, 2}.to_string() == "[4,2]");
}

TEST_CASE("conjugate") {
  CHECK(Partition{2, 1, 1}.conjugate() == Partition{3, 1});
  CHECK(Partition().conjugate().empty());
  CHECK(Partition{3, 2, 1}.conjugate() == Partition{3, 2, 1});
  for (const auto& l : partitions_up_to(10)) CHECK(l.conjugate().conjugate() == l);
}

TEST_CASE("r_lambda") {
  ExactPoly k = ExactPoly::variable();
  CHECK(r_lambda(Partition{1}) == k);
  CHECK(r_lambda(Partition{1, 1}) == k * (k - ExactPoly(1)) / ExactRational(2));
  CHECK(r_lambda(Partition{2, 1, 1}) == k * (k - ExactPoly(1)) * (k - ExactPoly(2)) / ExactRational(2));
  // counts monomials in m_lambda(z_1..z_k)
  for (const auto& l : partitions_up_to(6)) {
    for (int kv = l.length(); kv <= 6; ++kv) {
      std::vector<int> padded(kv, 0);
      for (int i = 0; i < l.length(); ++i) padded[i] = l.part(i);
      std::sort(padded.begin(), padded.end());
      std::set<std::vector<int>> perms;
      do perms.insert(padded);
      while (std::next_permutation(padded.begin(), padded.end()));
      CHECK(r_lambda(l).eval(kv) == static_cast<long>(perms.size()));
    }
  }
}

TEST_CASE("chi_degree") {
  CHECK(chi_degree(Partition{1}) == 1);
  CHECK(chi_degree(Partition{2, 1}) == 2);
  CHECK(chi_degree(Partition{2, 2}) == 2);
  CHECK(chi_degree(Partition()) == 1);
  for (const auto& l : partitions_up_to(10)) CHECK(chi_degree(l) == hook_count(l));
}

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "algebra.hpp"
#include "partitions.hpp"

namespace lfm {

// Distinct rearrangements of lambda padded with zeros to length |lambda|.
std::vector<std::vector<int>> arrangements(const Partition& lambda);

struct NormalForm {
  bool vanishes = false;
  int sign = 1;
  std::vector<int> u;  // non-increasing after normalization
  Partition alpha;     // nonzero prefix of u
};

enum class SwapOrder { Leftmost, Rightmost };

// Repeatedly replaces (u_m, u_{m+1}) by (u_{m+1}-1, u_m+1) with a sign flip while u_m < u_{m+1}.
NormalForm normalize_arrangement(std::vector<int> u, SwapOrder order = SwapOrder::Leftmost);

// P_lambda with a process-wide memo.
const ExactPoly& p_lambda_cached(const Partition& lambda);

ExactPoly n_lambda(const Partition& lambda);
// Value at a single integer k >= 1 from the determinant expansion.
ExactRational n_lambda_direct(const Partition& lambda, long k);

}  // namespace lfm

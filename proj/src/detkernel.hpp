// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "algebra.hpp"
#include "partitions.hpp"

namespace lfm {

enum class PRoute { Auto, Y, Z };

// P_lambda(k) as an exact polynomial in k by coefficient extraction.
ExactPoly p_lambda(const Partition& lambda, PRoute route = PRoute::Auto);
// Number of monomials in the extraction box of each route.
std::size_t p_lambda_box_size(const Partition& lambda, PRoute route);

// det[C(2k - i - lambda_{k-i+1}, 2k - 2j)], 1 <= i, j <= k; requires l(lambda) <= k.
ExactInt d_lambda(const Partition& lambda, long k);
// Same with an extra shift of one in the upper argument.
ExactInt e_lambda(const Partition& lambda, long k);

}  // namespace lfm

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "prec_real.hpp"

namespace lfm {

// B_0 .. B_n exactly.
const std::vector<ExactRational>& bernoulli_numbers(std::size_t n);

// Taylor coefficients c_0..c_{order-1} in eps of zeta(s0 + eps, a) by Euler-Maclaurin.
// For s0 == 1 the pole is removed: the series of zeta(1 + eps, a) - 1/eps.
// Throws PrecisionError when the remainder cannot be pushed below 2^-prec.
std::vector<PrecReal> hurwitz_series(long s0, const ExactRational& a, std::size_t order, mpfr_prec_t prec);

// gamma_n from zeta(s) = 1/(s-1) + sum (-1)^n gamma_n (s-1)^n / n!
PrecReal stieltjes(int n, mpfr_prec_t prec);
std::vector<PrecReal> stieltjes_all(int max_n, mpfr_prec_t prec);

// psi^{(m)}(a), m >= 0.
PrecReal polygamma(int m, const ExactRational& a, mpfr_prec_t prec);

PrecReal zeta_value(long s, mpfr_prec_t prec);

}  // namespace lfm

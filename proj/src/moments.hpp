// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "arithfactors.hpp"

namespace lfm {

// Coefficient r multiplies x^(degree - r).
struct MomentPolynomial {
  Family family = Family::QuadraticMinus;
  int k = 0;
  int degree = 0;
  mpfr_prec_t prec = 0;
  long cutoff = 0;
  std::vector<PrecReal> coefficients;
  std::vector<PrecReal> errors;
  bool complete() const { return static_cast<int>(coefficients.size()) == degree + 1; }
};

// 3/pi^2 for the quadratic families, 15/(11 pi^2) for the elliptic one.
PrecReal density_factor(Family f, mpfr_prec_t prec);

// Exact rational factor with c0 = factor * a_k.
ExactRational c0_factor(Family f, int k);

ValueWithError c0(Family f, int k, mpfr_prec_t prec, long cutoff = kDefaultPrimeCutoff);
ValueWithError c_coeff(Family f, int r, int k, mpfr_prec_t prec, long cutoff = kDefaultPrimeCutoff);
// max_r < 0 means every coefficient.
MomentPolynomial q_polynomial(Family f, int k, mpfr_prec_t prec, long cutoff = kDefaultPrimeCutoff, int max_r = -1);

// b-table shared by the moment routines, cached per (family, k, weight, prec, cutoff).
const BCoeffTable& cached_b_coeffs(Family f, int k, int max_weight, mpfr_prec_t prec, long cutoff);

// sum' sign E_alpha(k) prod (k + m - 2)_{u_m} over arrangements with u_m = 0 for m > k.
ExactRational elliptic_e_sum(const Partition& lambda, long k);
// c_r(k) via the E_alpha determinants instead of N_lambda(k - 1).
ValueWithError elliptic_c_e_route(int r, int k, mpfr_prec_t prec, long cutoff = kDefaultPrimeCutoff);

// (1/X) int_1^X Q(log t) dt = poly(log X) + remainder / X. Index j of the
// input and the polynomial output is the coefficient of x^j.
template <class C>
struct Averaged {
  std::vector<C> poly;
  C remainder;
};
Averaged<ExactRational> averaged_exact(const std::vector<ExactRational>& power_coeffs);
Averaged<PrecReal> averaged_real(const std::vector<PrecReal>& power_coeffs);

struct AveragedPolynomial {
  MomentPolynomial poly;
  PrecReal remainder;
};
AveragedPolynomial averaged_polynomial(const MomentPolynomial& q);

// Independent evaluation from the multivariate residue, k <= 3.
MomentPolynomial residue_oracle(Family f, int k, mpfr_prec_t prec, long cutoff = kDefaultPrimeCutoff);

struct IdentityReport {
  bool ok = true;
  std::vector<std::string> failures;
  int checked = 0;
};
IdentityReport identity_checks(int kmax);

}  // namespace lfm

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "mseries.hpp"
#include "partitions.hpp"
#include "prec_real.hpp"

namespace lfm {

enum class Family { QuadraticPlus, QuadraticMinus, Elliptic11a };

struct FamilySpec {
  Family kind;
  int a;           // gamma-factor parity for the quadratic families
  long conductor;  // 1 for quadratic, 11 for the elliptic family
  bool elliptic() const { return kind == Family::Elliptic11a; }
};

FamilySpec family_spec(Family f);
Family parse_family(const std::string& name);  // qd-plus, qd-minus, e11
std::string family_name(Family f);
// k(k+1)/2 or k(k-1)/2.
int moment_degree(Family f, int k);

struct ValueWithError {
  PrecReal value;
  PrecReal err;
};

constexpr long kDefaultPrimeCutoff = 10000;

// gamma_0 .. gamma_max_n, cached per precision.
const std::vector<PrecReal>& stieltjes_table(int max_n, mpfr_prec_t prec);

// Coefficients c_0..c_T of -(1/2) log X(1/2 + z).
std::vector<PrecReal> gamma_series(Family f, int T, mpfr_prec_t prec);

// Coefficients of log(s zeta(1 + s)) up to s^T.
std::vector<PrecReal> zeta_log_series(int T, mpfr_prec_t prec);

// Sum of log(zeta(1+z_i+z_j)(z_i+z_j)) over the family's pair range, with the
// remaining k - l variables set to zero.
MultiSeries<PrecReal> zeta_product_series(Family f, int k, const MonomialSet::Ptr& set, mpfr_prec_t prec);

// Log of the local Euler factor at p (compensating zeta factors included) in the
// variables of set; the remaining k - l variables are zero.
MultiSeries<PrecReal> local_factor_log_series(Family f, long p, int k, const MonomialSet::Ptr& set,
                                              mpfr_prec_t prec);

struct PrimeSum {
  MultiSeries<PrecReal> value;
  std::vector<PrecReal> err;  // absolute bound per coefficient
  long cutoff;
  int tail_terms;
};

// Sum over all primes of local_factor_log_series: direct for p <= cutoff plus a
// prime-zeta tail. Throws PrecisionError when the tail cannot meet the target.
PrimeSum prime_sum(Family f, int k, const MonomialSet::Ptr& set, mpfr_prec_t prec, long cutoff = kDefaultPrimeCutoff);

// sum_{p > P} p^{-j} (log p)^n for 0 <= n <= max_n, 2 <= j <= max_j (index [n][j]).
const std::vector<std::vector<PrecReal>>& prime_power_tail(int max_n, int max_j, long P, mpfr_prec_t prec);

struct BCoeffTable {
  Family family;
  int k = 0;
  int max_weight = 0;
  mpfr_prec_t prec = 0;
  long cutoff = 0;
  std::string tail_method;
  std::vector<Partition> lambdas;
  std::vector<PrecReal> values;
  std::vector<PrecReal> errors;
  ValueWithError a_k;

  // Throws InvalidArgument for partitions outside the table.
  const PrecReal& at(const Partition& l) const;
  const PrecReal& error_at(const Partition& l) const;
};

BCoeffTable b_coeffs(Family f, int k, int max_weight, mpfr_prec_t prec, long cutoff = kDefaultPrimeCutoff);

// a_k = A_k(0, ..., 0).
ValueWithError arithmetic_ak(Family f, int k, mpfr_prec_t prec, long cutoff = kDefaultPrimeCutoff);

// f_j(p) of the closed forms, q = p^{-1/2}.
PrecReal f_closed(int j, int k, const PrecReal& q);

ValueWithError b1_oracle(int k, int a, mpfr_prec_t prec, long cutoff = kDefaultPrimeCutoff);
ValueWithError b11_oracle(int k, int a, mpfr_prec_t prec, long cutoff = kDefaultPrimeCutoff);

}  // namespace lfm

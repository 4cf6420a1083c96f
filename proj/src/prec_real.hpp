// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mpfr.h>

#include <string>

#include "algebra.hpp"

namespace lfm {

// Arbitrary-precision real backed by MPFR; binary results take the smaller operand precision.
class PrecReal {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 256;

  explicit PrecReal(mpfr_prec_t prec = kDefaultPrecision);
  PrecReal(long v, mpfr_prec_t prec);
  PrecReal(double v, mpfr_prec_t prec);
  PrecReal(const ExactRational& q, mpfr_prec_t prec);
  PrecReal(const ExactInt& z, mpfr_prec_t prec);
  PrecReal(const PrecReal& o);
  PrecReal(PrecReal&& o) noexcept;
  PrecReal& operator=(const PrecReal& o);
  PrecReal& operator=(PrecReal&& o) noexcept;
  ~PrecReal();

  // Decimal or exact-hex ("0x...p...") string.
  static PrecReal parse(const std::string& s, mpfr_prec_t prec);
  static PrecReal pi(mpfr_prec_t prec);
  static PrecReal euler_gamma(mpfr_prec_t prec);
  static PrecReal log2(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  // Same value at a different precision (rounded to nearest).
  PrecReal with_precision(mpfr_prec_t prec) const;
  PrecReal zero_like() const { return PrecReal(precision()); }
  PrecReal one_like() const { return PrecReal(1L, precision()); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // floor(log2|x|)+1, or a very negative number for zero.
  long exponent2() const;

  // Scientific notation with the given significant digits, e.g. "-1.2345e-03".
  std::string to_string(int digits) const;
  // Round-trip exact hexadecimal form.
  std::string to_exact_string() const;

  PrecReal& operator+=(const PrecReal& o);
  PrecReal& operator-=(const PrecReal& o);
  PrecReal& operator*=(const PrecReal& o);
  PrecReal& operator/=(const PrecReal& o);
  PrecReal& operator*=(long s);
  PrecReal& operator/=(long s);
  PrecReal operator-() const;

  friend PrecReal operator+(const PrecReal& a, const PrecReal& b);
  friend PrecReal operator-(const PrecReal& a, const PrecReal& b);
  friend PrecReal operator*(const PrecReal& a, const PrecReal& b);
  friend PrecReal operator/(const PrecReal& a, const PrecReal& b);
  friend PrecReal operator*(PrecReal a, long s) { return a *= s; }
  friend PrecReal operator*(long s, PrecReal a) { return a *= s; }
  friend PrecReal operator/(PrecReal a, long s) { return a /= s; }

  friend bool operator<(const PrecReal& a, const PrecReal& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const PrecReal& a, const PrecReal& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const PrecReal& a, const PrecReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const PrecReal& a, const PrecReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const PrecReal& a, const PrecReal& b) { return mpfr_equal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

// acc += a * b with a single rounding.
void fma_acc(PrecReal& acc, const PrecReal& a, const PrecReal& b);

PrecReal abs(const PrecReal& x);
PrecReal sqrt(const PrecReal& x);
PrecReal log(const PrecReal& x);
PrecReal log1p(const PrecReal& x);
PrecReal exp(const PrecReal& x);
PrecReal pow(const PrecReal& x, const PrecReal& y);
PrecReal pow(const PrecReal& x, long n);
PrecReal max(const PrecReal& a, const PrecReal& b);
// 2^e at the given precision.
PrecReal pow2(long e, mpfr_prec_t prec);

// |a-b| / max(|b|, floor); useful for tolerance checks.
double relative_difference(const PrecReal& a, const PrecReal& b);

}  // namespace lfm

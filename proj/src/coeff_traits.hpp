// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "algebra.hpp"
#include "prec_real.hpp"

namespace lfm {

// Ring operations needed by the series code. Specialized per coefficient type.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<ExactInt> {
  static ExactInt one(const ExactInt&) { return 1; }
  static bool is_zero(const ExactInt& a) { return sgn(a) == 0; }
  static bool is_one(const ExactInt& a) { return a == 1; }
  static void fma(ExactInt& acc, const ExactInt& a, const ExactInt& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static void mul_int(ExactInt& a, long s) { a *= s; }
  static void div_int(ExactInt& a, long s) {
    if (!mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(s < 0 ? -s : s)))
      throw DomainError("inexact integer division in series");
    mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(s < 0 ? -s : s));
    if (s < 0) a = -a;
  }
};

template <>
struct CoeffTraits<ExactRational> {
  static ExactRational one(const ExactRational&) { return 1; }
  static bool is_zero(const ExactRational& a) { return sgn(a) == 0; }
  static bool is_one(const ExactRational& a) { return a == 1; }
  static void fma(ExactRational& acc, const ExactRational& a, const ExactRational& b) { acc += a * b; }
  static void mul_int(ExactRational& a, long s) { a *= s; }
  static void div_int(ExactRational& a, long s) { a /= s; }
  static ExactRational inverse(const ExactRational& a) {
    if (a == 0) throw DomainError("inverse of zero");
    return 1 / a;
  }
};

template <>
struct CoeffTraits<ExactPoly> {
  static ExactPoly one(const ExactPoly&) { return ExactPoly(1); }
  static bool is_zero(const ExactPoly& a) { return a.is_zero(); }
  static bool is_one(const ExactPoly& a) { return a == ExactPoly(1); }
  static void fma(ExactPoly& acc, const ExactPoly& a, const ExactPoly& b) { acc += a * b; }
  static void mul_int(ExactPoly& a, long s) { a *= ExactRational(s); }
  static void div_int(ExactPoly& a, long s) { a /= ExactRational(s); }
};

template <>
struct CoeffTraits<PrecReal> {
  static PrecReal one(const PrecReal& z) { return z.one_like(); }
  static bool is_zero(const PrecReal& a) { return a.is_zero(); }
  static bool is_one(const PrecReal& a) { return mpfr_cmp_si(a.raw(), 1) == 0; }
  static void fma(PrecReal& acc, const PrecReal& a, const PrecReal& b) { fma_acc(acc, a, b); }
  static void mul_int(PrecReal& a, long s) { a *= s; }
  static void div_int(PrecReal& a, long s) { a /= s; }
  static PrecReal inverse(const PrecReal& a) {
    if (a.is_zero()) throw DomainError("inverse of zero");
    return a.one_like() / a;
  }
  static PrecReal log(const PrecReal& a) { return lfm::log(a); }
  static PrecReal exp(const PrecReal& a) { return lfm::exp(a); }
};

}  // namespace lfm

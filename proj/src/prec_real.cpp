// SPDX-License-Identifier: Apache-2.0
#include "prec_real.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>

namespace lfm {

namespace {

mpfr_prec_t min_prec(const PrecReal& a, const PrecReal& b) { return std::min(a.precision(), b.precision()); }

void narrow(mpfr_ptr v, mpfr_prec_t target) {
  if (mpfr_get_prec(v) > target) mpfr_prec_round(v, target, MPFR_RNDN);
}

}  // namespace

PrecReal::PrecReal(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

PrecReal::PrecReal(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

PrecReal::PrecReal(double v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

PrecReal::PrecReal(const ExactRational& q, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

PrecReal::PrecReal(const ExactInt& z, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

PrecReal::PrecReal(const PrecReal& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

PrecReal::PrecReal(PrecReal&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

PrecReal& PrecReal::operator=(const PrecReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

PrecReal& PrecReal::operator=(PrecReal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

PrecReal::~PrecReal() { mpfr_clear(v_); }

PrecReal PrecReal::parse(const std::string& s, mpfr_prec_t prec) {
  PrecReal r(prec);
  const char* str = s.c_str();
  char* end = nullptr;
  // Base 0 accepts both decimal and the 0x...p... form.
  mpfr_strtofr(r.v_, str, &end, 0, MPFR_RNDN);
  if (s.empty() || end == str || *end != '\0') throw InvalidArgument("not a real number: " + s);
  return r;
}

PrecReal PrecReal::pi(mpfr_prec_t prec) {
  PrecReal r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::euler_gamma(mpfr_prec_t prec) {
  PrecReal r(prec);
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::log2(mpfr_prec_t prec) {
  PrecReal r(prec);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::with_precision(mpfr_prec_t prec) const {
  PrecReal r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long PrecReal::exponent2() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

std::string PrecReal::to_string(int digits) const {
  if (digits < 1) digits = 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string PrecReal::to_exact_string() const {
  if (mpfr_zero_p(v_)) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%Ra", v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

PrecReal& PrecReal::operator+=(const PrecReal& o) {
  narrow(v_, o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator-=(const PrecReal& o) {
  narrow(v_, o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator*=(const PrecReal& o) {
  narrow(v_, o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator/=(const PrecReal& o) {
  narrow(v_, o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator*=(long s) {
  mpfr_mul_si(v_, v_, s, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator/=(long s) {
  mpfr_div_si(v_, v_, s, MPFR_RNDN);
  return *this;
}

PrecReal PrecReal::operator-() const {
  PrecReal r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

PrecReal operator+(const PrecReal& a, const PrecReal& b) {
  PrecReal r(min_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

PrecReal operator-(const PrecReal& a, const PrecReal& b) {
  PrecReal r(min_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

PrecReal operator*(const PrecReal& a, const PrecReal& b) {
  PrecReal r(min_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

PrecReal operator/(const PrecReal& a, const PrecReal& b) {
  PrecReal r(min_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

void fma_acc(PrecReal& acc, const PrecReal& a, const PrecReal& b) {
  mpfr_fma(acc.raw(), a.raw(), b.raw(), acc.raw(), MPFR_RNDN);
}

PrecReal abs(const PrecReal& x) {
  PrecReal r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

PrecReal sqrt(const PrecReal& x) {
  PrecReal r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

PrecReal log(const PrecReal& x) {
  if (x.sign() <= 0) throw DomainError("log of non-positive number");
  PrecReal r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

PrecReal log1p(const PrecReal& x) {
  PrecReal r(x.precision());
  mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN);
  if (!r.is_finite()) throw DomainError("log1p out of domain");
  return r;
}

PrecReal exp(const PrecReal& x) {
  PrecReal r(x.precision());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

PrecReal pow(const PrecReal& x, const PrecReal& y) {
  PrecReal r(std::min(x.precision(), y.precision()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

PrecReal pow(const PrecReal& x, long n) {
  PrecReal r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

PrecReal max(const PrecReal& a, const PrecReal& b) { return a < b ? b : a; }

PrecReal pow2(long e, mpfr_prec_t prec) {
  PrecReal r(1L, prec);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

double relative_difference(const PrecReal& a, const PrecReal& b) {
  PrecReal d = abs(a - b);
  PrecReal s = abs(b);
  if (s.is_zero()) return d.to_double();
  return (d / s).to_double();
}

}  // namespace lfm

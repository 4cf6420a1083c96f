// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "coeff_traits.hpp"

namespace lfm {

// Truncated univariate power series helpers; all results have length n.
namespace series1 {

template <class C>
std::vector<C> mul(const std::vector<C>& a, const std::vector<C>& b, std::size_t n, const C& zero) {
  std::vector<C> c(n, zero);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (CoeffTraits<C>::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) CoeffTraits<C>::fma(c[i + j], a[i], b[j]);
  }
  return c;
}

template <class C>
std::vector<C> inverse(const std::vector<C>& a, std::size_t n, const C& zero) {
  if (a.empty()) throw DomainError("inverse of zero series");
  std::vector<C> b(n, zero);
  if (n == 0) return b;
  C inv0 = CoeffTraits<C>::inverse(a[0]);
  b[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    C s = zero;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) CoeffTraits<C>::fma(s, a[i], b[k - i]);
    b[k] = -(s * inv0);
  }
  return b;
}

// log(a) for a series with invertible constant term.
template <class C>
std::vector<C> log(const std::vector<C>& a, std::size_t n, const C& zero) {
  if (a.empty()) throw DomainError("log of zero series");
  std::vector<C> f(n, zero);
  if (n == 0) return f;
  f[0] = CoeffTraits<C>::log(a[0]);
  C inv0 = CoeffTraits<C>::inverse(a[0]);
  auto at = [&](std::size_t i) -> const C& { return i < a.size() ? a[i] : zero; };
  for (std::size_t k = 1; k < n; ++k) {
    C s = at(k);
    CoeffTraits<C>::mul_int(s, static_cast<long>(k));
    for (std::size_t i = 1; i < k; ++i) {
      C t = f[i];
      CoeffTraits<C>::mul_int(t, static_cast<long>(i));
      s -= t * at(k - i);
    }
    s = s * inv0;
    CoeffTraits<C>::div_int(s, static_cast<long>(k));
    f[k] = s;
  }
  return f;
}

template <class C>
std::vector<C> exp(const std::vector<C>& a, std::size_t n, const C& zero) {
  std::vector<C> g(n, zero);
  if (n == 0) return g;
  auto at = [&](std::size_t i) -> const C& { return i < a.size() ? a[i] : zero; };
  g[0] = CoeffTraits<C>::exp(at(0));
  for (std::size_t k = 1; k < n; ++k) {
    C s = zero;
    for (std::size_t i = 1; i <= k; ++i) {
      C t = at(i);
      CoeffTraits<C>::mul_int(t, static_cast<long>(i));
      CoeffTraits<C>::fma(s, t, g[k - i]);
    }
    CoeffTraits<C>::div_int(s, static_cast<long>(k));
    g[k] = s;
  }
  return g;
}

}  // namespace series1

// Truncated power series in an auxiliary small parameter with PrecReal coefficients.
class QSeries {
 public:
  QSeries() = default;
  QSeries(std::size_t length, mpfr_prec_t prec) : c_(length, PrecReal(prec)) {}
  QSeries(std::vector<PrecReal> c) : c_(std::move(c)) {}  // NOLINT

  static QSeries constant(const PrecReal& v, std::size_t length);
  static QSeries variable(std::size_t length, mpfr_prec_t prec);

  std::size_t length() const { return c_.size(); }
  mpfr_prec_t precision() const { return c_.empty() ? PrecReal::kDefaultPrecision : c_[0].precision(); }
  PrecReal& operator[](std::size_t i) { return c_[i]; }
  const PrecReal& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<PrecReal>& coefficients() const { return c_; }

  QSeries zero_like() const { return QSeries(length(), precision()); }
  bool is_zero() const;
  // Coefficients of even powers, as a series in the square of the variable.
  QSeries even_part() const;
  // Largest |c_i| for odd i.
  PrecReal odd_magnitude() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(long s);
  QSeries& operator/=(long s);
  QSeries operator-() const;
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const PrecReal& s);

 private:
  std::vector<PrecReal> c_;
};

template <>
struct CoeffTraits<QSeries> {
  static QSeries one(const QSeries& z);
  static bool is_zero(const QSeries& a) { return a.is_zero(); }
  static bool is_one(const QSeries& a);
  static void fma(QSeries& acc, const QSeries& a, const QSeries& b);
  static void mul_int(QSeries& a, long s) { a *= s; }
  static void div_int(QSeries& a, long s) { a /= s; }
  static QSeries inverse(const QSeries& a);
  static QSeries log(const QSeries& a);
  static QSeries exp(const QSeries& a);
};

}  // namespace lfm

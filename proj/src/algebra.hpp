// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace lfm {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<ExactRational> coeffs);
  ExactPoly(const ExactRational& c);  // NOLINT implicit constant
  ExactPoly(long c) : ExactPoly(ExactRational(c)) {}  // NOLINT

  static ExactPoly variable();
  static ExactPoly monomial(const ExactRational& c, std::size_t power);
  // Product of (x - r) over roots, times lead.
  static ExactPoly from_roots(const std::vector<ExactRational>& roots, const ExactRational& lead = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<ExactRational>& coefficients() const { return c_; }
  ExactRational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : ExactRational(0); }
  ExactRational leading() const { return c_.empty() ? ExactRational(0) : c_.back(); }

  ExactRational eval(const ExactRational& x) const;
  // Substitute x -> x + shift.
  ExactPoly shifted(const ExactRational& shift) const;

  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly& operator-=(const ExactPoly& o);
  ExactPoly& operator*=(const ExactPoly& o);
  ExactPoly& operator*=(const ExactRational& s);
  ExactPoly& operator/=(const ExactRational& s);

  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(ExactPoly a, const ExactRational& s) { return a *= s; }
  friend ExactPoly operator*(const ExactRational& s, ExactPoly a) { return a *= s; }
  friend ExactPoly operator/(ExactPoly a, const ExactRational& s) { return a /= s; }
  ExactPoly operator-() const;
  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "k") const;

 private:
  void trim();
  std::vector<ExactRational> c_;
};

// Product of linear factors over integer roots in [-root_bound, root_bound] times the
// leading constant and any remaining factor, e.g. "(1/2) (k - 1) (k + 2)".
std::string factored_string(const ExactPoly& p, const std::string& var = "k", int root_bound = 64);

// Quotient and remainder of a by b (b nonzero).
std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& a, const ExactPoly& b);

ExactInt factorial(long n);
// C(n, m); zero for m < 0 or m > n >= 0; falling-factorial form for n < 0.
ExactInt binomial(long n, long m);
// (x)_n = x (x-1) ... (x-n+1)
ExactInt falling_factorial(const ExactInt& x, long n);
ExactPoly falling_factorial(const ExactPoly& x, long n);
// C(x, m) as a polynomial in x.
ExactPoly binomial_poly(const ExactPoly& x, long m);

// Unique polynomial of degree < n through n points with distinct abscissae.
ExactPoly interpolate(const std::vector<std::pair<ExactRational, ExactRational>>& points);

using IntMatrix = std::vector<std::vector<ExactInt>>;
using RationalMatrix = std::vector<std::vector<ExactRational>>;

// Fraction-free Bareiss elimination with row pivoting.
ExactInt det_bareiss(IntMatrix m);
ExactRational det_rational(RationalMatrix m);

// "num/den" with den >= 1.
std::string rational_to_string(const ExactRational& q);
ExactRational rational_from_string(const std::string& s);

}  // namespace lfm

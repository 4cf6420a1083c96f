// SPDX-License-Identifier: Apache-2.0
#include "special.hpp"

#include <cmath>
#include <mutex>

namespace lfm {

const std::vector<ExactRational>& bernoulli_numbers(std::size_t n) {
  static std::mutex mu;
  static std::vector<ExactRational> cache{ExactRational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    std::size_t m = cache.size();
    ExactRational s = 0;
    if (m % 2 == 1 && m > 1) {
      cache.emplace_back(0);
      continue;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (j % 2 == 1 && j > 1) continue;
      s += ExactRational(binomial(static_cast<long>(m + 1), static_cast<long>(j))) * cache[j];
    }
    ExactRational b = -s / ExactRational(static_cast<long>(m + 1));
    b.canonicalize();
    cache.push_back(b);
  }
  return cache;
}

namespace {

// Coefficients of x^{-s0} exp(-eps log x) up to order, times scale.
void add_power_series(std::vector<PrecReal>& out, const PrecReal& x, long s0, const PrecReal& scale) {
  PrecReal lx = log(x);
  PrecReal term = pow(x, -s0) * scale;
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] += term;
    term *= lx;
    term /= -static_cast<long>(m + 1);
  }
}

}  // namespace

std::vector<PrecReal> hurwitz_series(long s0, const ExactRational& a, std::size_t order, mpfr_prec_t prec) {
  if (order == 0) return {};
  if (a <= 0) throw DomainError("hurwitz zeta needs a > 0");
  if (s0 < 1) throw DomainError("hurwitz series needs s0 >= 1");
  const mpfr_prec_t wp = prec + 64;
  const long n_terms = 16 + static_cast<long>(wp) / 3;
  std::vector<PrecReal> out(order, PrecReal(wp));
  PrecReal one(1L, wp);
  PrecReal av(a, wp);
  for (long n = 0; n < n_terms; ++n) add_power_series(out, av + PrecReal(n, wp), s0, one);
  PrecReal x = av + PrecReal(n_terms, wp);
  PrecReal lx = log(x);
  // Integral term x^{1-s}/(s-1).
  if (s0 == 1) {
    PrecReal t = -lx;  // (-L)^{m+1}/(m+1)!
    for (std::size_t m = 0; m < order; ++m) {
      out[m] += t;
      t *= lx;
      t /= -static_cast<long>(m + 2);
    }
  } else {
    // x^{1-s0} e^{-eps L} / (s0-1) * sum (-eps/(s0-1))^m
    std::vector<PrecReal> e(order, PrecReal(wp)), g(order, PrecReal(wp));
    PrecReal t = pow(x, 1 - s0);
    for (std::size_t m = 0; m < order; ++m) {
      e[m] = t;
      t *= lx;
      t /= -static_cast<long>(m + 1);
    }
    PrecReal inv = one / PrecReal(s0 - 1, wp);
    PrecReal gm = inv;
    for (std::size_t m = 0; m < order; ++m) {
      g[m] = gm;
      gm *= -inv;
    }
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; i + j < order; ++j) fma_acc(out[i + j], e[i], g[j]);
  }
  add_power_series(out, x, s0, one / PrecReal(2L, wp));
  // Bernoulli corrections: B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}.
  std::vector<PrecReal> rising(order, PrecReal(wp));  // (s0+eps)_{2j-1} as a series
  rising[0] = PrecReal(s0, wp);
  if (order > 1) rising[1] = one;
  std::vector<PrecReal> ex(order, PrecReal(wp));
  {
    PrecReal t(1L, wp);
    for (std::size_t m = 0; m < order; ++m) {
      ex[m] = t;
      t *= lx;
      t /= -static_cast<long>(m + 1);
    }
  }
  const long kmax = 4 * static_cast<long>(wp);
  const PrecReal target = pow2(-static_cast<long>(prec) - 24, wp);
  PrecReal xpow = pow(x, -s0 - 1);
  PrecReal x2inv = one / (x * x);
  bool converged = false;
  PrecReal last(wp);
  for (long j = 1; j <= kmax; ++j) {
    const auto& B = bernoulli_numbers(2 * j);
    PrecReal coef(B[2 * j] / ExactRational(factorial(2 * j)), wp);
    coef *= xpow;
    // term = coef * rising * ex
    std::vector<PrecReal> prod(order, PrecReal(wp));
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t k = 0; i + k < order; ++k) fma_acc(prod[i + k], rising[i], ex[k]);
    PrecReal mag(wp);
    for (std::size_t m = 0; m < order; ++m) {
      PrecReal t = prod[m] * coef;
      out[m] += t;
      mag = max(mag, abs(t));
    }
    last = mag;
    if (mag < target) {
      converged = true;
      break;
    }
    // rising *= (s0 + 2j - 1 + eps)(s0 + 2j + eps)
    for (long f = 2 * j - 1; f <= 2 * j; ++f) {
      PrecReal c(s0 + f, wp);
      for (std::size_t m = order; m-- > 0;) {
        PrecReal v = rising[m] * c;
        if (m > 0) v += rising[m - 1];
        rising[m] = v;
      }
    }
    xpow *= x2inv;
  }
  if (!converged) {
    double digits = -std::log10(std::max(last.to_double(), 1e-300));
    throw PrecisionError("Euler-Maclaurin remainder above target", digits);
  }
  for (auto& c : out) c = c.with_precision(prec);
  return out;
}

PrecReal stieltjes(int n, mpfr_prec_t prec) { return stieltjes_all(n, prec)[n]; }

std::vector<PrecReal> stieltjes_all(int max_n, mpfr_prec_t prec) {
  if (max_n < 0) throw InvalidArgument("negative Stieltjes index");
  auto c = hurwitz_series(1, 1, max_n + 1, prec + 32);
  std::vector<PrecReal> g;
  for (int n = 0; n <= max_n; ++n) {
    PrecReal v = c[n] * PrecReal(factorial(n), prec + 32);
    if (n % 2) v = -v;
    g.push_back(v.with_precision(prec));
  }
  return g;
}

PrecReal polygamma(int m, const ExactRational& a, mpfr_prec_t prec) {
  if (m < 0) throw InvalidArgument("negative polygamma order");
  if (m == 0) return -hurwitz_series(1, a, 1, prec)[0];
  PrecReal z = hurwitz_series(m + 1, a, 1, prec)[0];
  z *= PrecReal(factorial(m), prec);
  return (m % 2 == 0) ? -z : z;
}

PrecReal zeta_value(long s, mpfr_prec_t prec) {
  if (s < 2) throw DomainError("zeta_value needs s >= 2");
  PrecReal r(prec);
  mpfr_zeta_ui(r.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
  return r;
}

}  // namespace lfm

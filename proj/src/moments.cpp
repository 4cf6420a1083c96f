// SPDX-License-Identifier: Apache-2.0
#include "moments.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "context.hpp"
#include "detkernel.hpp"
#include "nlambda.hpp"

namespace lfm {

namespace {

ExactRational pow2_exact(long e) {
  ExactInt p = ExactInt(1) << static_cast<unsigned long>(e < 0 ? -e : e);
  return e < 0 ? ExactRational(ExactInt(1), p) : ExactRational(p);
}

ExactRational exact_n_lambda(const Partition& l, long k) {
  static std::mutex mu;
  static std::map<std::vector<int>, ExactPoly> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(l.parts());
  if (it == memo.end()) it = memo.emplace(l.parts(), n_lambda(l)).first;
  return it->second.eval(ExactRational(k));
}

const ValueWithError& cached_ak(Family f, int k, mpfr_prec_t prec, long cutoff) {
  static std::mutex mu;
  static std::map<std::tuple<bool, int, mpfr_prec_t, long>, ValueWithError> cache;
  const bool ell = family_spec(f).elliptic();
  auto key = std::make_tuple(ell, k, prec, cutoff);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto stored = cache_load_ak(f, k, prec, cutoff);
  ValueWithError v = stored ? *stored : arithmetic_ak(f, k, prec, cutoff);
  if (!stored) cache_store_ak(f, k, prec, cutoff, v);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(v)).first->second;
}

int default_weight(Family f, int k, int r) { return std::max(r, std::min(moment_degree(f, k), 10)); }

}  // namespace

PrecReal density_factor(Family f, mpfr_prec_t prec) {
  PrecReal pi = PrecReal::pi(prec);
  PrecReal num(family_spec(f).elliptic() ? ExactRational(15, 11) : ExactRational(3), prec);
  return num / (pi * pi);
}

ExactRational c0_factor(Family f, int k) {
  if (k < 1) throw InvalidArgument("k must be positive");
  ExactRational r = 1;
  if (!family_spec(f).elliptic()) {
    for (int j = 0; j < k; ++j) r *= ExactRational(factorial(2 * j), factorial(k + j));
    r *= pow2_exact(-k);
  } else {
    for (int j = 0; j < k; ++j) r *= ExactRational(factorial(2 * j), factorial(k + j - 1));
    r *= pow2_exact(k + (k - 1) * (k - 2) / 2);
  }
  r.canonicalize();
  return r;
}

ValueWithError c0(Family f, int k, mpfr_prec_t prec, long cutoff) {
  const ValueWithError& ak = cached_ak(f, k, prec, cutoff);
  PrecReal fac(c0_factor(f, k), prec);
  return {ak.value * fac, ak.err * abs(fac).with_precision(64)};
}

const BCoeffTable& cached_b_coeffs(Family f, int k, int max_weight, mpfr_prec_t prec, long cutoff) {
  static std::mutex mu;
  static std::map<std::tuple<Family, int, mpfr_prec_t, long>, BCoeffTable> cache;
  auto key = std::make_tuple(f, k, prec, cutoff);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end() && it->second.max_weight >= max_weight) return it->second;
  }
  auto stored = cache_load_b(f, k, max_weight, prec, cutoff);
  BCoeffTable t = stored ? std::move(*stored) : b_coeffs(f, k, max_weight, prec, cutoff);
  if (!stored) cache_store_b(t);
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = std::move(t);
  return cache[key];
}

ValueWithError c_coeff(Family f, int r, int k, mpfr_prec_t prec, long cutoff) {
  const int deg = moment_degree(f, k);
  if (r < 0 || r > deg) throw InvalidArgument("r must lie in [0, degree]");
  const bool ell = family_spec(f).elliptic();
  const BCoeffTable& t = cached_b_coeffs(f, k, default_weight(f, k, r), prec, cutoff);
  const mpfr_prec_t wp = prec + 16;
  PrecReal sum(wp);
  PrecReal err(64);
  for (const auto& lam : partitions_of(r)) {
    if (lam.length() > k) continue;
    PrecReal n(exact_n_lambda(lam, ell ? k - 1 : k), wp);
    sum += t.at(lam) * n;
    err += t.error_at(lam) * abs(n).with_precision(64);
  }
  ValueWithError base = c0(f, k, wp, cutoff);
  if (ell) {
    base.value *= PrecReal(pow2_exact(-r), wp);
    base.err *= PrecReal(pow2_exact(-r), 64);
  }
  PrecReal v = base.value * sum;
  PrecReal e = abs(base.value).with_precision(64) * err + base.err * abs(sum).with_precision(64);
  return {v.with_precision(prec), e};
}

MomentPolynomial q_polynomial(Family f, int k, mpfr_prec_t prec, long cutoff, int max_r) {
  MomentPolynomial q;
  q.family = f;
  q.k = k;
  q.degree = moment_degree(f, k);
  q.prec = prec;
  q.cutoff = cutoff;
  const int top = max_r < 0 ? q.degree : std::min(max_r, q.degree);
  cached_b_coeffs(f, k, default_weight(f, k, top), prec, cutoff);
  for (int r = 0; r <= top; ++r) {
    ValueWithError c = c_coeff(f, r, k, prec, cutoff);
    q.coefficients.push_back(c.value);
    q.errors.push_back(c.err);
  }
  return q;
}

ExactRational elliptic_e_sum(const Partition& lambda, long k) {
  if (k < 1) throw InvalidArgument("k must be positive");
  ExactRational sum = 0;
  for (const auto& u : arrangements(lambda)) {
    bool ok = true;
    for (std::size_t m = static_cast<std::size_t>(k) + 1; m <= u.size(); ++m)
      if (u[m - 1] != 0) ok = false;
    if (!ok) continue;
    NormalForm nf = normalize_arrangement(u);
    if (nf.vanishes) continue;
    ExactInt prod = nf.sign;
    for (std::size_t m = 1; m <= u.size(); ++m) prod *= falling_factorial(ExactInt(k + static_cast<long>(m) - 2), u[m - 1]);
    if (prod == 0) continue;
    sum += ExactRational(prod * e_lambda(nf.alpha, k));
  }
  return sum;
}

ValueWithError elliptic_c_e_route(int r, int k, mpfr_prec_t prec, long cutoff) {
  const Family f = Family::Elliptic11a;
  const int deg = moment_degree(f, k);
  if (r < 0 || r > deg) throw InvalidArgument("r must lie in [0, degree]");
  const BCoeffTable& t = cached_b_coeffs(f, k, default_weight(f, k, r), prec, cutoff);
  const mpfr_prec_t wp = prec + 16;
  PrecReal sum(wp);
  PrecReal err(64);
  for (const auto& lam : partitions_of(r)) {
    if (lam.length() > k) continue;
    PrecReal s(elliptic_e_sum(lam, k), wp);
    sum += t.at(lam) * s;
    err += t.error_at(lam) * abs(s).with_precision(64);
  }
  ExactRational fac = pow2_exact(k);
  for (int j = 0; j < k; ++j) fac *= ExactRational(factorial(2 * j), factorial(k + j - 1));
  const ValueWithError& ak = cached_ak(f, k, wp, cutoff);
  PrecReal pre = ak.value * PrecReal(fac, wp);
  PrecReal pre_err = ak.err * PrecReal(fac, 64);
  PrecReal v = pre * sum;
  return {v.with_precision(prec), abs(pre).with_precision(64) * err + pre_err * abs(sum).with_precision(64)};
}

namespace {

template <class C>
Averaged<C> averaged_impl(const std::vector<C>& a, const C& zero) {
  // int_1^X (log t)^n dt = X sum_j (-1)^{n-j} n!/j! (log X)^j - (-1)^n n!
  const int deg = static_cast<int>(a.size()) - 1;
  Averaged<C> out{std::vector<C>(a.size(), zero), zero};
  for (int n = 0; n <= deg; ++n) {
    for (int j = 0; j <= n; ++j) {
      ExactInt w = factorial(n) / factorial(j);
      if ((n - j) % 2) w = -w;
      if constexpr (std::is_same_v<C, ExactRational>)
        out.poly[j] += a[n] * ExactRational(w);
      else
        out.poly[j] += a[n] * C(w, zero.precision());
    }
    ExactInt w = factorial(n);
    if (n % 2 == 0) w = -w;
    if constexpr (std::is_same_v<C, ExactRational>)
      out.remainder += a[n] * ExactRational(w);
    else
      out.remainder += a[n] * C(w, zero.precision());
  }
  return out;
}

}  // namespace

Averaged<ExactRational> averaged_exact(const std::vector<ExactRational>& power_coeffs) {
  return averaged_impl(power_coeffs, ExactRational(0));
}

Averaged<PrecReal> averaged_real(const std::vector<PrecReal>& power_coeffs) {
  mpfr_prec_t prec = power_coeffs.empty() ? PrecReal::kDefaultPrecision : power_coeffs[0].precision();
  return averaged_impl(power_coeffs, PrecReal(prec));
}

AveragedPolynomial averaged_polynomial(const MomentPolynomial& q) {
  if (!q.complete()) throw InvalidArgument("averaging needs every coefficient of the polynomial");
  std::vector<PrecReal> a(q.coefficients.rbegin(), q.coefficients.rend());
  auto av = averaged_real(a);
  AveragedPolynomial out{q, av.remainder};
  for (int r = 0; r <= q.degree; ++r) out.poly.coefficients[r] = av.poly[q.degree - r];
  // Error bounds map through the same triangular transform in absolute value.
  std::vector<PrecReal> e(q.errors.rbegin(), q.errors.rend());
  for (int r = 0; r <= q.degree; ++r) {
    PrecReal s(64);
    const int j = q.degree - r;
    for (int n = j; n <= q.degree; ++n) s += e[n] * PrecReal(ExactInt(factorial(n) / factorial(j)), 64);
    out.poly.errors[r] = s;
  }
  return out;
}

MomentPolynomial residue_oracle(Family f, int k, mpfr_prec_t prec, long cutoff) {
  if (k < 1 || k > 3) throw InvalidArgument("residue oracle supports 1 <= k <= 3");
  const bool ell = family_spec(f).elliptic();
  const int deg = moment_degree(f, k);
  const mpfr_prec_t wp = prec + 32;
  auto set = MonomialSet::total_degree(k, std::max(deg, 0));
  PrecReal zero(wp);
  MultiSeries<PrecReal> L(set, zero);
  auto gs = gamma_series(f, set->max_degree(), wp);
  for (int j = 0; j < k; ++j) L += embed_univariate(set, j, gs, zero);
  L += zeta_product_series(f, k, set, wp);
  PrimeSum ps = prime_sum(f, k, set, wp, cutoff);
  L += ps.value;
  PrecReal ak = exp(L[0]);
  PrecReal ak_rel = ps.err[0] * PrecReal(2L, 64);
  L[0] = zero;
  auto H = ms_exp(L);
  MultiSeries<PrecReal> absH(set, PrecReal(64)), dL(set, PrecReal(64));
  for (std::size_t i = 0; i < set->size(); ++i) {
    absH[i] = abs(H[i]).with_precision(64);
    if (i) dL[i] = ps.err[i];
  }
  auto dH = ms_mul(absH, ms_exp(dL));
  for (std::size_t i = 0; i < set->size(); ++i) dH[i] -= absH[i];

  const int cap = ell ? 2 * k - 2 : 2 * k - 1;
  auto box = MonomialSet::box(std::vector<int>(k, cap));
  MultiSeries<PrecReal> G(box, zero), Gerr(box, PrecReal(64));
  for (std::size_t i = 0; i < set->size(); ++i) {
    long j = box->index_of(set->exponent(i));
    if (j < 0) continue;
    G[j] = H[i];
    Gerr[j] = dH[i];
  }
  // Delta(z) Delta(z^2) as a sparse integer polynomial.
  std::map<Exponent, long> V{{Exponent(k, 0), 1}};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int pw = 1; pw <= 2; ++pw) {
        std::map<Exponent, long> next;
        for (const auto& [e, c] : V) {
          Exponent a = e, b = e;
          a[j] += pw;
          b[i] += pw;
          next[a] += c;
          next[b] -= c;
        }
        V.clear();
        for (const auto& [e, c] : next)
          if (c) V.emplace(e, c);
      }
  std::vector<SparseTerm<PrecReal>> vt, vabs, sum_z, sum_z_abs;
  for (const auto& [e, c] : V) {
    vt.push_back({e, PrecReal(c, wp)});
    vabs.push_back({e, PrecReal(c < 0 ? -c : c, 64)});
  }
  for (int j = 0; j < k; ++j) {
    Exponent e(k, 0);
    e[j] = 1;
    sum_z.push_back({e, PrecReal(1L, wp)});
    sum_z_abs.push_back({e, PrecReal(1L, 64)});
  }
  G = ms_mul_sparse(G, vt);
  Gerr = ms_mul_sparse(Gerr, vabs);
  const Exponent target(k, cap);
  ExactRational pre(ExactInt((k * (k - 1) / 2) % 2 ? -1 : 1), factorial(k));
  if (ell) pre *= pow2_exact(k);

  MomentPolynomial q;
  q.family = f;
  q.k = k;
  q.degree = deg;
  q.prec = prec;
  q.cutoff = cutoff;
  q.coefficients.assign(deg + 1, PrecReal(prec));
  q.errors.assign(deg + 1, PrecReal(64));
  for (int n = 0; n <= deg; ++n) {
    ExactRational w = pre / ExactRational(factorial(n));
    if (!ell) w *= pow2_exact(-n);
    PrecReal coef = G.coeff(target) * PrecReal(w, wp);
    PrecReal v = coef * ak;
    q.coefficients[deg - n] = v.with_precision(prec);
    PrecReal aw = abs(PrecReal(w, 64));
    q.errors[deg - n] = Gerr.coeff(target) * aw * abs(ak).with_precision(64) + abs(v).with_precision(64) * ak_rel;
    if (n < deg) {
      G = ms_mul_sparse(G, sum_z);
      Gerr = ms_mul_sparse(Gerr, sum_z_abs);
    }
  }
  return q;
}

IdentityReport identity_checks(int kmax) {
  if (kmax < 1 || kmax > 30) throw InvalidArgument("kmax must lie in [1, 30]");
  IdentityReport rep;
  for (int k = 1; k <= kmax; ++k) {
    ExactRational rhs = 1, dfact = 1;
    for (int j = 1; j <= k; ++j) {
      rhs *= ExactRational(factorial(j), factorial(2 * j));
      ExactInt df = 1;
      for (int i = 2 * j - 1; i > 1; i -= 2) df *= i;
      dfact *= ExactRational(ExactInt(1), df);
    }
    dfact *= pow2_exact(-static_cast<long>(k) * (k + 1) / 2);
    ExactRational lhs = c0_factor(Family::QuadraticPlus, k);
    ++rep.checked;
    if (lhs != rhs || dfact != rhs) {
      rep.ok = false;
      rep.failures.push_back("quadratic leading factor, k=" + std::to_string(k));
    }
    ExactRational erhs = pow2_exact(static_cast<long>(k) * (k + 1) / 2);
    for (int j = 0; j < k; ++j) erhs *= ExactRational(factorial(j), factorial(2 * j));
    ++rep.checked;
    if (c0_factor(Family::Elliptic11a, k) != erhs) {
      rep.ok = false;
      rep.failures.push_back("elliptic leading factor, k=" + std::to_string(k));
    }
  }
  return rep;
}

}  // namespace lfm

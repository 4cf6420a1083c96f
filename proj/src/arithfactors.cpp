// SPDX-License-Identifier: Apache-2.0
#include "arithfactors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "elliptic.hpp"
#include "primes.hpp"
#include "special.hpp"

namespace lfm {

FamilySpec family_spec(Family f) {
  switch (f) {
    case Family::QuadraticPlus:
      return {f, 0, 1};
    case Family::QuadraticMinus:
      return {f, 1, 1};
    case Family::Elliptic11a:
      return {f, 0, 11};
  }
  throw InvalidArgument("unknown family");
}

Family parse_family(const std::string& name) {
  if (name == "qd-plus") return Family::QuadraticPlus;
  if (name == "qd-minus") return Family::QuadraticMinus;
  if (name == "e11") return Family::Elliptic11a;
  throw InvalidArgument("unknown family '" + name + "' (expected qd-plus, qd-minus or e11)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::QuadraticPlus:
      return "qd-plus";
    case Family::QuadraticMinus:
      return "qd-minus";
    case Family::Elliptic11a:
      return "e11";
  }
  return "?";
}

int moment_degree(Family f, int k) {
  if (k < 1) throw InvalidArgument("k must be positive");
  return family_spec(f).elliptic() ? k * (k - 1) / 2 : k * (k + 1) / 2;
}

const std::vector<PrecReal>& stieltjes_table(int max_n, mpfr_prec_t prec) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, std::vector<PrecReal>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& v = cache[prec];
  if (static_cast<int>(v.size()) <= max_n) v = stieltjes_all(std::max(max_n, 12), prec);
  return v;
}

std::vector<PrecReal> gamma_series(Family f, int T, mpfr_prec_t prec) {
  if (T < 0) throw InvalidArgument("negative truncation degree");
  const mpfr_prec_t wp = prec + 16;
  std::vector<PrecReal> c(T + 1, PrecReal(wp));
  const FamilySpec spec = family_spec(f);
  if (T == 0) return {PrecReal(prec)};
  PrecReal pi = PrecReal::pi(wp);
  if (!spec.elliptic()) {
    ExactRational center = ExactRational(1, 4) + ExactRational(spec.a, 2);
    for (int n = 1; n <= T; n += 2) {
      PrecReal v = polygamma(n - 1, center, wp);
      v /= PrecReal(factorial(n), wp) * pow2(n, wp);
      c[n] = v;
    }
    c[1] -= log(pi) / PrecReal(2L, wp);
  } else {
    PrecReal two_pi = pi * PrecReal(2L, wp);
    c[1] = -log(two_pi / sqrt(PrecReal(11L, wp))) - PrecReal::euler_gamma(wp);
    for (int n = 3; n <= T; n += 2) c[n] = -zeta_value(n, wp) / PrecReal(static_cast<long>(n), wp);
  }
  for (auto& x : c) x = x.with_precision(prec);
  return c;
}

std::vector<PrecReal> zeta_log_series(int T, mpfr_prec_t prec) {
  if (T < 0) throw InvalidArgument("negative truncation degree");
  const mpfr_prec_t wp = prec + 16;
  std::vector<PrecReal> a(T + 1, PrecReal(wp));
  a[0] = PrecReal(1L, wp);
  if (T >= 1) {
    const auto& g = stieltjes_table(T - 1, wp);
    for (int n = 0; n + 1 <= T; ++n) {
      PrecReal v = g[n] / PrecReal(factorial(n), wp);
      a[n + 1] = (n % 2) ? -v : v;
    }
  }
  auto out = series1::log(a, T + 1, PrecReal(wp));
  for (auto& x : out) x = x.with_precision(prec);
  return out;
}

MultiSeries<PrecReal> zeta_product_series(Family f, int k, const MonomialSet::Ptr& set, mpfr_prec_t prec) {
  const int l = set->num_vars();
  if (l > k) throw InvalidArgument("more variables than k");
  const bool strict = family_spec(f).elliptic();
  auto h = zeta_log_series(set->max_degree(), prec);
  PrecReal zero(prec);
  MultiSeries<PrecReal> out(set, zero);
  for (int i = 0; i < l; ++i) {
    for (int j = strict ? i + 1 : i; j < l; ++j) out += embed_pair_sum(set, i, j, h, zero);
    if (k > l) out += ms_scale(embed_univariate(set, i, h, zero), PrecReal(static_cast<long>(k - l), prec));
  }
  return out;
}

namespace {

// Univariate series in t with coefficient c * base^m / m!.
template <class C>
std::vector<C> exp_series(const C& c, long base, int T) {
  std::vector<C> out;
  C term = c;
  for (int m = 0; m <= T; ++m) {
    out.push_back(term);
    term *= base;
    term /= static_cast<long>(m + 1);
  }
  return out;
}

template <class C>
std::vector<C> add_series(std::vector<C> a, const std::vector<C>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class C>
C pow_int(const C& a, long n) {
  C r = CoeffTraits<C>::one(a);
  for (long i = 0; i < n; ++i) r = r * a;
  return r;
}

template <class C>
MultiSeries<C> unit_series(const MonomialSet::Ptr& set, const C& zero) {
  MultiSeries<C> f(set, zero);
  f[0] = CoeffTraits<C>::one(zero);
  return f;
}

// Pair compensators sum log(1 - x e^{t_i + t_j}) over the family's pair range,
// counting the k - l zero variables.
template <class C>
void add_compensators(MultiSeries<C>& L, bool strict, int k, const C& x) {
  const auto& set = L.set_ptr();
  const int l = set->num_vars();
  const int T = set->max_degree();
  const C zero = L.zero();
  const C one = CoeffTraits<C>::one(zero);
  auto neg_x = exp_series<C>(-x, 1, T);
  neg_x[0] += one;
  auto v = series1::log(neg_x, T + 1, zero);
  for (int i = 0; i < l; ++i) {
    for (int j = strict ? i + 1 : i; j < l; ++j) L += embed_pair_sum(set, i, j, v, zero);
    if (k > l) {
      auto u = embed_univariate(set, i, v, zero);
      for (auto& c : u.coefficients()) c *= static_cast<long>(k - l);
      L += u;
    }
  }
  const long m = k - l;
  const long pairs = strict ? m * (m - 1) / 2 : m * (m + 1) / 2;
  C c0 = v[0];
  c0 *= pairs;
  L[0] += c0;
}

// Log of the quadratic local factor in t_j = -z_j log p, q = p^{-1/2}.
template <class C>
MultiSeries<C> quadratic_local(int k, const MonomialSet::Ptr& set, const C& q) {
  const int l = set->num_vars();
  const int T = set->max_degree();
  const C zero = q.zero_like();
  const C one = CoeffTraits<C>::one(zero);
  const C x = q * q;
  MultiSeries<C> B(set, zero);
  for (int sigma : {1, -1}) {
    C sq = q;
    sq *= sigma;
    auto g = exp_series<C>(-sq, 1, T);
    g[0] += one;
    auto u = series1::inverse(g, T + 1, zero);
    MultiSeries<C> prod = unit_series(set, zero);
    for (int j = 0; j < l; ++j) prod = ms_mul_univariate(prod, j, u);
    C rest = pow_int(CoeffTraits<C>::inverse(one - sq), k - l);
    for (auto& c : prod.coefficients()) c = c * rest;
    B += prod;
  }
  for (auto& c : B.coefficients()) c /= 2L;
  B[0] += x;
  MultiSeries<C> L = ms_log_general(B);
  L[0] -= CoeffTraits<C>::log(one + x);
  add_compensators(L, false, k, x);
  return L;
}

// Log of the elliptic local factor for p != 11; lambda = a(p) / sqrt(p).
template <class C>
MultiSeries<C> elliptic_local(int k, const MonomialSet::Ptr& set, const C& q, const PrecReal& lambda) {
  const int l = set->num_vars();
  const int T = set->max_degree();
  const C zero = q.zero_like();
  const C one = CoeffTraits<C>::one(zero);
  const C x = q * q;
  MultiSeries<C> R(set, zero);
  for (int sigma : {1, -1}) {
    C lq = q * lambda;
    lq *= sigma;
    auto g = add_series(exp_series<C>(-lq, 1, T), exp_series<C>(x, 2, T));
    g[0] += one;
    auto v = series1::inverse(g, T + 1, zero);
    MultiSeries<C> prod = unit_series(set, zero);
    for (int j = 0; j < l; ++j) prod = ms_mul_univariate(prod, j, v);
    C rest = pow_int(v[0], k - l);
    for (auto& c : prod.coefficients()) c = c * rest;
    R += prod;
  }
  for (auto& c : R.coefficients()) c /= 2L;
  R[0] += x;
  MultiSeries<C> L = ms_log_general(R);
  L[0] -= CoeffTraits<C>::log(one + x);
  add_compensators(L, true, k, x);
  return L;
}

template <class C>
MultiSeries<C> elliptic_local_11(int k, const MonomialSet::Ptr& set, const C& q) {
  const int l = set->num_vars();
  const int T = set->max_degree();
  const C zero = q.zero_like();
  const C one = CoeffTraits<C>::one(zero);
  const C x = q * q;
  auto g = exp_series<C>(x, 1, T);
  g[0] += one;
  auto w = series1::log(g, T + 1, zero);
  MultiSeries<C> L(set, zero);
  for (int j = 0; j < l; ++j) L -= embed_univariate(set, j, w, zero);
  C c0 = w[0];
  c0 *= static_cast<long>(k - l);
  L[0] -= c0;
  add_compensators(L, true, k, x);
  return L;
}

// t-coefficients to z-coefficients: multiply by (-log p)^{|e|}.
void accumulate_z(MultiSeries<PrecReal>& acc, std::vector<PrecReal>& abs_acc, const MultiSeries<PrecReal>& t,
                  const PrecReal& logp) {
  const MonomialSet& s = t.set();
  std::vector<PrecReal> powers{logp.one_like()};
  for (int d = 1; d <= s.max_degree(); ++d) powers.push_back(-(powers.back() * logp));
  for (std::size_t i = 0; i < s.size(); ++i) {
    PrecReal v = t[i] * powers[s.degree(i)];
    acc[i] += v;
    abs_acc[i] += abs(v);
  }
}

struct PrimeData {
  std::vector<long> primes;
  std::vector<long> ap;
};

const PrimeData& prime_data(long P) {
  static std::mutex mu;
  static std::map<long, PrimeData> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(P);
  if (it != cache.end()) return it->second;
  PrimeData d;
  d.primes = primes_up_to(P);
  auto an = elliptic_an(P);
  for (long p : d.primes) d.ap.push_back(an[p]);
  return cache.emplace(P, std::move(d)).first->second;
}

PrecReal digits_bound(mpfr_prec_t prec) {
  // 10^{-0.3 prec}
  return pow(PrecReal(10L, 64), PrecReal(-0.3 * static_cast<double>(prec), 64));
}

double achievable_digits(const PrecReal& err, const PrecReal& scale) {
  PrecReal s = max(abs(scale), PrecReal(1L, 64));
  double r = (err.with_precision(64) / s.with_precision(64)).to_double();
  if (!(r > 0)) return 300;
  return -std::log10(r);
}

// Sato-Tate quadrature: nodes lambda_i = 2 cos(i pi/(n+1)), weights 2/(n+1) sin^2.
void sato_tate_nodes(int n, mpfr_prec_t prec, std::vector<PrecReal>& nodes, std::vector<PrecReal>& weights) {
  PrecReal pi = PrecReal::pi(prec);
  for (int i = 1; i <= n; ++i) {
    PrecReal th = pi * PrecReal(static_cast<long>(i), prec) / PrecReal(static_cast<long>(n + 1), prec);
    PrecReal c(prec), s(prec);
    mpfr_cos(c.raw(), th.raw(), MPFR_RNDN);
    mpfr_sin(s.raw(), th.raw(), MPFR_RNDN);
    nodes.push_back(c * PrecReal(2L, prec));
    weights.push_back(s * s * PrecReal(2L, prec) / PrecReal(static_cast<long>(n + 1), prec));
  }
}

constexpr int kMaxTailTerms = 64;

// Smallest J with the constant-term tail contribution of x^J below 2^{-bits}.
template <class F>
int probe_tail_terms(F local_q, long P, mpfr_prec_t wp, int start) {
  auto one_set = MonomialSet::total_degree(1, 0);
  const int probe = kMaxTailTerms;
  QSeries q = QSeries::variable(2 * probe + 1, wp);
  auto L = local_q(one_set, q);
  QSeries g = L[0].even_part();
  const auto& T = prime_power_tail(0, probe, P, wp - 96);
  PrecReal target = pow2(-static_cast<long>(wp) + 64, 64);
  int J = start;
  for (int j = 2; j <= probe; ++j) {
    PrecReal term = abs(g[j]) * T[0][j];
    if (!term.is_zero() && term > target) J = std::max(J, j + 4);
  }
  return std::min(J, kMaxTailTerms);
}

}  // namespace

MultiSeries<PrecReal> local_factor_log_series(Family f, long p, int k, const MonomialSet::Ptr& set,
                                              mpfr_prec_t prec) {
  if (!is_prime(p)) throw InvalidArgument("local factor needs a prime");
  if (set->num_vars() > k) throw InvalidArgument("more variables than k");
  const mpfr_prec_t wp = prec + 32;
  PrecReal pr(p, wp);
  PrecReal q = PrecReal(1L, wp) / sqrt(pr);
  MultiSeries<PrecReal> t(set, PrecReal(wp));
  if (!family_spec(f).elliptic()) {
    t = quadratic_local(k, set, q);
  } else if (p == 11) {
    t = elliptic_local_11(k, set, q);
  } else {
    PrecReal lambda = PrecReal(elliptic_ap(p), wp) * q;
    t = elliptic_local(k, set, q, lambda);
  }
  MultiSeries<PrecReal> out(set, PrecReal(wp));
  std::vector<PrecReal> dummy(set->size(), PrecReal(wp));
  accumulate_z(out, dummy, t, log(pr));
  for (auto& c : out.coefficients()) c = c.with_precision(prec);
  return out;
}

const std::vector<std::vector<PrecReal>>& prime_power_tail(int max_n, int max_j, long P, mpfr_prec_t prec) {
  static std::mutex mu;
  static std::map<std::tuple<long, mpfr_prec_t>, std::vector<std::vector<PrecReal>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(P, prec);
  auto it = cache.find(key);
  if (it != cache.end() && static_cast<int>(it->second.size()) > max_n &&
      static_cast<int>(it->second[0].size()) > max_j)
    return it->second;
  if (P < 100) throw InvalidArgument("prime cutoff must be at least 100");
  const int N = std::max(max_n, 12);
  const int JJ = std::max(max_j, kMaxTailTerms);
  const mpfr_prec_t wp = prec + 96;
  const auto primes = primes_up_to(P);
  const double log2P = std::log2(static_cast<double>(P));
  // l_n(x) = [eps^n] log prod_{p > P} (1 - p^{-x-eps})^{-1}, negligible beyond xmax.
  const long xmax = static_cast<long>((static_cast<double>(wp) + 48) / log2P) + 1;
  std::vector<std::vector<PrecReal>> ell(xmax + 1);
  for (long x = 2; x <= xmax; ++x) {
    auto z = hurwitz_series(x, 1, N + 1, wp);
    auto lz = series1::log(z, N + 1, PrecReal(wp));
    for (long p : primes) {
      PrecReal L = log(PrecReal(p, wp));
      PrecReal y = pow(PrecReal(p, wp), -x);
      if (y.is_zero()) continue;
      std::vector<PrecReal> a;
      PrecReal term = -y;
      for (int m = 0; m <= N; ++m) {
        a.push_back(term);
        term *= -L;
        term /= static_cast<long>(m + 1);
      }
      a[0] += PrecReal(1L, wp);
      auto la = series1::log(a, N + 1, PrecReal(wp));
      for (int m = 0; m <= N; ++m) lz[m] += la[m];
    }
    ell[x] = std::move(lz);
  }
  auto mu_tab = mobius_table(xmax);
  std::vector<std::vector<PrecReal>> T(N + 1, std::vector<PrecReal>(JJ + 1, PrecReal(prec)));
  for (int n = 0; n <= N; ++n) {
    PrecReal nf(factorial(n), wp);
    for (int j = 2; j <= JJ; ++j) {
      PrecReal s(wp);
      for (long d = 1; d * j <= xmax; ++d) {
        if (mu_tab[d] == 0) continue;
        PrecReal v = ell[d * j][n] * pow(PrecReal(d, wp), static_cast<long>(n - 1));
        if (mu_tab[d] < 0) v = -v;
        s += v;
      }
      s *= nf;
      if (n % 2) s = -s;
      T[n][j] = s.with_precision(prec);
    }
  }
  cache[key] = std::move(T);
  return cache[key];
}

namespace {

PrimeSum prime_sum_uncached(Family f, int k, const MonomialSet::Ptr& set, mpfr_prec_t prec, long cutoff);

}  // namespace

PrimeSum prime_sum(Family f, int k, const MonomialSet::Ptr& set, mpfr_prec_t prec, long cutoff) {
  if (cutoff < 100) throw InvalidArgument("prime cutoff must be at least 100");
  if (set->num_vars() > k) throw InvalidArgument("more variables than k");
  // The quadratic Euler product does not depend on the sign.
  struct Entry {
    bool elliptic;
    int k;
    MonomialSet::Ptr set;
    mpfr_prec_t prec;
    long cutoff;
    PrimeSum value;
  };
  static std::mutex mu;
  static std::vector<Entry> cache;
  const bool ell = family_spec(f).elliptic();
  {
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& e : cache)
      if (e.elliptic == ell && e.k == k && e.prec == prec && e.cutoff == cutoff && e.set->same_shape(*set)) {
        PrimeSum r = e.value;
        r.value = MultiSeries<PrecReal>(set, r.value.zero());
        r.value.coefficients() = e.value.value.coefficients();
        return r;
      }
  }
  PrimeSum r = prime_sum_uncached(f, k, set, prec, cutoff);
  std::lock_guard<std::mutex> lock(mu);
  cache.push_back({ell, k, set, prec, cutoff, r});
  return r;
}

namespace {

PrimeSum prime_sum_uncached(Family f, int k, const MonomialSet::Ptr& set, mpfr_prec_t prec, long cutoff) {
  const FamilySpec spec = family_spec(f);
  const mpfr_prec_t wp = prec + 32;
  const PrimeData& pd = prime_data(cutoff);
  const int R = set->max_degree();
  PrecReal wzero(wp);
  MultiSeries<PrecReal> direct(set, wzero);
  std::vector<PrecReal> absum(set->size(), PrecReal(wp));
  for (std::size_t i = 0; i < pd.primes.size(); ++i) {
    const long p = pd.primes[i];
    PrecReal pr(p, wp);
    PrecReal q = PrecReal(1L, wp) / sqrt(pr);
    MultiSeries<PrecReal> t(set, wzero);
    if (!spec.elliptic())
      t = quadratic_local(k, set, q);
    else if (p == 11)
      t = elliptic_local_11(k, set, q);
    else
      t = elliptic_local(k, set, q, PrecReal(pd.ap[i], wp) * q);
    accumulate_z(direct, absum, t, log(pr));
  }

  const auto& Ttab = prime_power_tail(R, kMaxTailTerms, cutoff, prec + 32);
  const PrecReal target = digits_bound(prec);
  std::vector<PrecReal> tail(set->size(), PrecReal(wp));
  std::vector<PrecReal> err(set->size(), PrecReal(64));
  int J = 0;
  if (!spec.elliptic()) {
    auto local_q = [&](const MonomialSet::Ptr& s, const QSeries& q) { return quadratic_local(k, s, q); };
    J = probe_tail_terms(local_q, cutoff, wp, 8);
    for (;;) {
      QSeries q = QSeries::variable(2 * J + 1, wp);
      auto Lq = quadratic_local(k, set, q);
      bool ok = true;
      for (std::size_t e = 0; e < set->size(); ++e) {
        const int n = set->degree(e);
        QSeries g = Lq[e].even_part();
        PrecReal s(wp);
        for (int j = 2; j <= J; ++j) s += g[j] * Ttab[n][j];
        if (n % 2) s = -s;
        tail[e] = s;
        PrecReal trunc = (abs(g[J] * Ttab[n][J]) + abs(g[J - 1] * Ttab[n][J - 1])).with_precision(64);
        trunc *= 2L;
        PrecReal lin = abs(g[1]).with_precision(64);  // vanishes identically
        err[e] = trunc + lin;
        PrecReal total = (direct[e] + s).with_precision(64);
        if (err[e] > target * max(abs(total), PrecReal(1L, 64))) ok = false;
      }
      if (ok || J >= kMaxTailTerms) break;
      J = std::min(kMaxTailTerms, J + 12);
    }
  } else {
    // Sato-Tate average for x^j, j >= 2; the x^1 term has mean zero and is bounded separately.
    J = 10;
    const int nodes_n = J + 1;
    std::vector<PrecReal> nodes, weights;
    sato_tate_nodes(nodes_n, wp, nodes, weights);
    std::vector<std::vector<QSeries>> g(nodes_n);
    for (int i = 0; i < nodes_n; ++i) {
      QSeries q = QSeries::variable(2 * J + 1, wp);
      auto Lq = elliptic_local(k, set, q, nodes[i]);
      for (std::size_t e = 0; e < set->size(); ++e) g[i].push_back(Lq[e].even_part());
    }
    const double logP = std::log(static_cast<double>(cutoff));
    for (std::size_t e = 0; e < set->size(); ++e) {
      const int n = set->degree(e);
      PrecReal s(wp), spread(64), alpha(64);
      for (int j = 2; j <= J; ++j) {
        PrecReal avg(wp);
        for (int i = 0; i < nodes_n; ++i) fma_acc(avg, weights[i], g[i][e][j]);
        PrecReal dev(64);
        for (int i = 0; i < nodes_n; ++i) dev = max(dev, abs(g[i][e][j] - avg).with_precision(64));
        s += avg * Ttab[n][j];
        spread += dev * Ttab[n][j].with_precision(64);
      }
      for (int i = 0; i < nodes_n; ++i) {
        PrecReal d = nodes[i] * nodes[i] - PrecReal(1L, wp);
        if (abs(d) > PrecReal(0.25, 64)) alpha = max(alpha, abs(g[i][e][1] / d).with_precision(64));
      }
      if (n % 2) s = -s;
      tail[e] = s;
      double linear = std::pow(logP, n + 1) / std::sqrt(static_cast<double>(cutoff)) * 2.0;
      err[e] = alpha * PrecReal(linear, 64) + spread;
    }
  }

  PrimeSum out{MultiSeries<PrecReal>(set, PrecReal(prec)), {}, cutoff, J};
  const PrecReal ulp = pow2(-static_cast<long>(wp) + 16, 64);
  for (std::size_t e = 0; e < set->size(); ++e) {
    out.value[e] = (direct[e] + tail[e]).with_precision(prec);
    PrecReal rnd = absum[e].with_precision(64) * ulp * PrecReal(static_cast<long>(pd.primes.size()), 64);
    out.err.push_back(err[e] + rnd);
    if (!spec.elliptic() && err[e] > target * max(abs(out.value[e]).with_precision(64), PrecReal(1L, 64)))
      throw PrecisionError("prime tail bound above target precision",
                           achievable_digits(err[e], out.value[e]));
  }
  return out;
}

}  // namespace

const PrecReal& BCoeffTable::at(const Partition& l) const {
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    if (lambdas[i] == l) return values[i];
  throw InvalidArgument("partition " + l.to_string() + " not in coefficient table");
}

const PrecReal& BCoeffTable::error_at(const Partition& l) const {
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    if (lambdas[i] == l) return errors[i];
  throw InvalidArgument("partition " + l.to_string() + " not in coefficient table");
}

BCoeffTable b_coeffs(Family f, int k, int max_weight, mpfr_prec_t prec, long cutoff) {
  if (k < 1) throw InvalidArgument("k must be positive");
  if (max_weight < 0 || max_weight > 20) throw InvalidArgument("max weight must be in [0, 20]");
  const mpfr_prec_t wp = prec + 32;
  const int l = std::max(1, std::min(k, max_weight));
  auto set = MonomialSet::partition_dominated(l, max_weight);
  PrecReal zero(wp);
  MultiSeries<PrecReal> L(set, zero);
  auto gs = gamma_series(f, max_weight, wp);
  for (int j = 0; j < l; ++j) L += embed_univariate(set, j, gs, zero);
  L += zeta_product_series(f, k, set, wp);
  PrimeSum ps = prime_sum(f, k, set, wp, cutoff);
  L += ps.value;

  BCoeffTable t;
  t.family = f;
  t.k = k;
  t.max_weight = max_weight;
  t.prec = prec;
  t.cutoff = cutoff;
  t.tail_method = family_spec(f).elliptic() ? "sato-tate average, x^1 term bounded" : "prime zeta via Mobius inversion";
  t.a_k.value = exp(L[0]).with_precision(prec);
  t.a_k.err = t.a_k.value.with_precision(64) * ps.err[0] * PrecReal(2L, 64);
  L[0] = zero;
  auto b = ms_exp(L);

  // |db| <= |b| * dL as series.
  MultiSeries<PrecReal> absb(set, PrecReal(64)), dl(set, PrecReal(64));
  for (std::size_t i = 0; i < set->size(); ++i) {
    absb[i] = abs(b[i]).with_precision(64);
    dl[i] = i == 0 ? PrecReal(64) : ps.err[i];
  }
  auto db = ms_mul(absb, ms_exp(dl));
  const PrecReal ulp = pow2(-static_cast<long>(prec) + 4, 64);
  for (const auto& lam : partitions_up_to(max_weight, k)) {
    Exponent e(l, 0);
    for (int i = 0; i < lam.length(); ++i) e[i] = lam.part(i);
    long idx = set->index_of(e);
    t.lambdas.push_back(lam);
    t.values.push_back(b[idx].with_precision(prec));
    PrecReal err = idx == 0 ? PrecReal(64) : db[idx] - absb[idx] + absb[idx] * ulp;
    t.errors.push_back(err);
  }
  return t;
}

ValueWithError arithmetic_ak(Family f, int k, mpfr_prec_t prec, long cutoff) {
  if (k < 1) throw InvalidArgument("k must be positive");
  auto set = MonomialSet::total_degree(1, 0);
  PrimeSum ps = prime_sum(f, k, set, prec + 16, cutoff);
  ValueWithError r{exp(ps.value[0]).with_precision(prec), PrecReal(64)};
  r.err = r.value.with_precision(64) * ps.err[0] * PrecReal(2L, 64);
  return r;
}

namespace {

template <class C>
C f_generic(int j, int k, const C& q) {
  const C one = CoeffTraits<C>::one(q);
  C A = CoeffTraits<C>::inverse(one - q);
  C B = CoeffTraits<C>::inverse(one + q);
  C num = pow_int(A, j + k);
  if (j % 2) num = -num;
  num += pow_int(B, j + k);
  num = num * pow_int(q, j);
  C den = pow_int(A, k) + pow_int(B, k);
  C q2 = q * q;
  q2 *= 2L;
  den += q2;
  return num * CoeffTraits<C>::inverse(den);
}

template <class C>
C phi1(int k, const C& q) {
  const C one = CoeffTraits<C>::one(q);
  C x = q * q;
  C r = x * CoeffTraits<C>::inverse(one - x);
  r *= static_cast<long>(k + 1);
  return r + f_generic(1, k, q);
}

template <class C>
C phi2(int k, const C& q) {
  const C one = CoeffTraits<C>::one(q);
  C x = q * q;
  C inv = CoeffTraits<C>::inverse(one - x);
  C f1 = f_generic(1, k, q);
  return x * inv * inv + f1 * f1 - f_generic(2, k, q);
}

// sum_p phi(p^{-1/2}) (log p)^n with phi even in q and phi = O(q^4).
template <class F>
ValueWithError scalar_prime_sum(F phi, int n, mpfr_prec_t prec, long P) {
  const mpfr_prec_t wp = prec + 32;
  const auto primes = primes_up_to(P);
  PrecReal s(wp), abs_s(wp);
  for (long p : primes) {
    PrecReal pr(p, wp);
    PrecReal v = phi(PrecReal(1L, wp) / sqrt(pr)) * pow(log(pr), static_cast<long>(n));
    s += v;
    abs_s += abs(v);
  }
  const auto& T = prime_power_tail(n, kMaxTailTerms, P, prec + 32);
  const int J = kMaxTailTerms;
  QSeries g = phi(QSeries::variable(2 * J + 1, wp)).even_part();
  PrecReal tail(wp);
  for (int j = 2; j <= J; ++j) tail += g[j] * T[n][j];
  PrecReal err = (abs(g[J] * T[n][J]) + abs(g[J - 1] * T[n][J - 1])).with_precision(64) * PrecReal(2L, 64) +
                 abs(g[1]).with_precision(64) + abs_s.with_precision(64) * pow2(-static_cast<long>(wp) + 16, 64) *
                                                      PrecReal(static_cast<long>(primes.size()), 64);
  return {(s + tail).with_precision(prec), err};
}

}  // namespace

PrecReal f_closed(int j, int k, const PrecReal& q) { return f_generic(j, k, q); }

ValueWithError b1_oracle(int k, int a, mpfr_prec_t prec, long cutoff) {
  if (k < 1) throw InvalidArgument("k must be positive");
  if (a != 0 && a != 1) throw InvalidArgument("a must be 0 or 1");
  const mpfr_prec_t wp = prec + 16;
  auto S = scalar_prime_sum([k](const auto& q) { return phi1(k, q); }, 1, wp, cutoff);
  PrecReal g0 = stieltjes_table(1, wp)[0];
  ExactRational center = ExactRational(1, 4) + ExactRational(a, 2);
  PrecReal v = -log(PrecReal::pi(wp)) / PrecReal(2L, wp) + polygamma(0, center, wp) / PrecReal(2L, wp) +
               g0 * PrecReal(static_cast<long>(k + 1), wp) + S.value;
  return {v.with_precision(prec), S.err};
}

ValueWithError b11_oracle(int k, int a, mpfr_prec_t prec, long cutoff) {
  const mpfr_prec_t wp = prec + 16;
  ValueWithError b1 = b1_oracle(k, a, wp, cutoff);
  auto S = scalar_prime_sum([k](const auto& q) { return phi2(k, q); }, 2, wp, cutoff);
  const auto& g = stieltjes_table(1, wp);
  PrecReal v = b1.value * b1.value - g[0] * g[0] - g[1] * PrecReal(2L, wp) - S.value;
  PrecReal err = S.err + b1.err * abs(b1.value).with_precision(64) * PrecReal(2L, 64);
  return {v.with_precision(prec), err};
}

}  // namespace lfm

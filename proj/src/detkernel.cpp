// SPDX-License-Identifier: Apache-2.0
#include "detkernel.hpp"

#include "mseries.hpp"

namespace lfm {

namespace {

struct Kernel {
  std::vector<int> beta;
  std::vector<SparseTerm<ExactInt>> pair_terms(int i, int j, int sign) const {
    // (x_i - x_j)(1 + sign (x_i + x_j)) = x_i - x_j + sign x_i^2 - sign x_j^2
    const int n = static_cast<int>(beta.size());
    auto unit = [n](int v, int power) {
      Exponent e(n, 0);
      e[v] = power;
      return e;
    };
    return {{unit(i, 1), ExactInt(1)}, {unit(j, 1), ExactInt(-1)}, {unit(i, 2), ExactInt(sign)}, {unit(j, 2), ExactInt(-sign)}};
  }
};

// sum_a F_a prod_i w[i][beta_i - a_i], contracting one variable at a time.
ExactPoly contract(const MultiSeries<ExactInt>& f, const std::vector<int>& beta,
                   const std::vector<std::vector<ExactPoly>>& w) {
  const int n = static_cast<int>(beta.size());
  if (n == 0) return ExactPoly(f[0]);
  // Row-major strides over the box; the set is a box, so walk it directly.
  std::vector<std::size_t> dims(n);
  for (int v = 0; v < n; ++v) dims[v] = static_cast<std::size_t>(beta[v]) + 1;
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  // Densify with row-major order (last variable fastest).
  std::vector<ExactPoly> cur(total);
  {
    const MonomialSet& s = f.set();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (sgn(f[i]) == 0) continue;
      const int* e = s.exponent(i);
      std::size_t k = 0;
      for (int v = 0; v < n; ++v) k = k * dims[v] + e[v];
      cur[k] = ExactPoly(ExactRational(f[i]));
    }
  }
  for (int v = n - 1; v >= 0; --v) {
    std::size_t outer = total / dims[v];
    std::vector<ExactPoly> next(outer);
    for (std::size_t o = 0; o < outer; ++o) {
      ExactPoly acc;
      for (std::size_t a = 0; a < dims[v]; ++a) {
        const ExactPoly& c = cur[o * dims[v] + a];
        if (c.is_zero()) continue;
        acc += c * w[v][beta[v] - a];
      }
      next[o] = std::move(acc);
    }
    cur = std::move(next);
    total = outer;
  }
  return cur[0];
}

ExactPoly route_y(const Partition& lambda) {
  const int m = lambda.length();
  Kernel ker;
  for (int i = 0; i < m; ++i) ker.beta.push_back(lambda.part(i) + m - 1 - i);
  auto set = MonomialSet::box(ker.beta);
  MultiSeries<ExactInt> f(set, ExactInt(0));
  f[0] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) f = ms_mul_sparse(f, ker.pair_terms(i, j, -1));
  // c_j(k) = (k + m + j - 1)_j / j!
  const ExactPoly k = ExactPoly::variable();
  std::vector<std::vector<ExactPoly>> w(m);
  for (int v = 0; v < m; ++v)
    for (int j = 0; j <= ker.beta[v]; ++j) w[v].push_back(binomial_poly(k + ExactPoly(m + j - 1), j));
  return contract(f, ker.beta, w);
}

ExactPoly route_z(const Partition& lambda) {
  const int n = lambda.largest();
  const Partition mu = lambda.conjugate();
  Kernel ker;
  for (int i = 0; i < n; ++i) ker.beta.push_back(mu.part(i) + n - 1 - i);
  auto set = MonomialSet::box(ker.beta);
  MultiSeries<ExactInt> f(set, ExactInt(0));
  f[0] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f = ms_mul_sparse(f, ker.pair_terms(i, j, 1));
  for (int l = 0; l < n; ++l) {
    Exponent e(n, 0);
    e[l] = 1;
    f = ms_mul_sparse(f, std::vector<SparseTerm<ExactInt>>{{Exponent(n, 0), ExactInt(1)}, {e, ExactInt(2)}});
  }
  // binom(k - n, j)
  const ExactPoly kn = ExactPoly::variable() - ExactPoly(n);
  std::vector<std::vector<ExactPoly>> w(n);
  for (int v = 0; v < n; ++v)
    for (int j = 0; j <= ker.beta[v]; ++j) w[v].push_back(binomial_poly(kn, j));
  return contract(f, ker.beta, w);
}

std::size_t box_of(const std::vector<int>& parts) {
  const int m = static_cast<int>(parts.size());
  std::size_t b = 1;
  for (int i = 0; i < m; ++i) b *= static_cast<std::size_t>(parts[i] + m - i);
  return b;
}

}  // namespace

std::size_t p_lambda_box_size(const Partition& lambda, PRoute route) {
  switch (route) {
    case PRoute::Y:
      return box_of(lambda.parts());
    case PRoute::Z:
      return box_of(lambda.conjugate().parts());
    case PRoute::Auto:
      break;
  }
  return std::min(box_of(lambda.parts()), box_of(lambda.conjugate().parts()));
}

ExactPoly p_lambda(const Partition& lambda, PRoute route) {
  if (lambda.empty()) return ExactPoly(1);
  if (route == PRoute::Auto)
    route = p_lambda_box_size(lambda, PRoute::Y) <= p_lambda_box_size(lambda, PRoute::Z) ? PRoute::Y : PRoute::Z;
  return route == PRoute::Y ? route_y(lambda) : route_z(lambda);
}

namespace {

ExactInt shifted_det(const Partition& lambda, long k, long shift) {
  if (k < 0) throw InvalidArgument("k must be non-negative");
  if (lambda.length() > k) throw InvalidArgument("partition longer than k");
  IntMatrix m(k, std::vector<ExactInt>(k));
  for (long i = 1; i <= k; ++i) {
    long part = lambda.part(static_cast<int>(k - i));
    for (long j = 1; j <= k; ++j) m[i - 1][j - 1] = binomial(2 * k - i - shift - part, 2 * k - 2 * j);
  }
  return det_bareiss(std::move(m));
}

}  // namespace

ExactInt d_lambda(const Partition& lambda, long k) { return shifted_det(lambda, k, 0); }

ExactInt e_lambda(const Partition& lambda, long k) { return shifted_det(lambda, k, 1); }

}  // namespace lfm

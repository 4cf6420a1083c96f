// SPDX-License-Identifier: Apache-2.0
#include "nlambda.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "detkernel.hpp"

namespace lfm {

std::vector<std::vector<int>> arrangements(const Partition& lambda) {
  std::vector<int> u(lambda.weight(), 0);
  for (int i = 0; i < lambda.length(); ++i) u[i] = lambda.part(i);
  std::sort(u.begin(), u.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(u);
  } while (std::next_permutation(u.begin(), u.end()));
  return out;
}

namespace {

bool has_equal_rows(const std::vector<int>& u) {
  const int n = static_cast<int>(u.size());
  for (int m = 0; m < n; ++m)
    for (int mp = m + 1; mp < n; ++mp)
      if (u[mp] - u[m] == mp - m) return true;
  return false;
}

}  // namespace

NormalForm normalize_arrangement(std::vector<int> u, SwapOrder order) {
  NormalForm nf;
  if (has_equal_rows(u)) {
    nf.vanishes = true;
    nf.sign = 0;
    nf.u = std::move(u);
    return nf;
  }
  const int n = static_cast<int>(u.size());
  while (true) {
    int pick = -1;
    if (order == SwapOrder::Leftmost) {
      for (int m = 0; m + 1 < n; ++m)
        if (u[m] < u[m + 1]) {
          pick = m;
          break;
        }
    } else {
      for (int m = n - 2; m >= 0; --m)
        if (u[m] < u[m + 1]) {
          pick = m;
          break;
        }
    }
    if (pick < 0) break;
    if (u[pick + 1] - u[pick] == 1) {
      nf.vanishes = true;
      nf.sign = 0;
      nf.u = std::move(u);
      return nf;
    }
    int a = u[pick], b = u[pick + 1];
    u[pick] = b - 1;
    u[pick + 1] = a + 1;
    nf.sign = -nf.sign;
  }
  std::vector<int> prefix;
  for (int x : u) {
    if (x == 0) break;
    prefix.push_back(x);
  }
  nf.alpha = Partition(prefix);
  nf.u = std::move(u);
  return nf;
}

const ExactPoly& p_lambda_cached(const Partition& lambda) {
  static std::mutex mu;
  static std::map<std::vector<int>, ExactPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(lambda.parts());
    if (it != memo.end()) return it->second;
  }
  ExactPoly p = p_lambda(lambda);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(lambda.parts(), std::move(p)).first->second;
}

namespace {

using IntPoly = std::vector<__int128>;

ExactPoly to_exact(const IntPoly& p) {
  std::vector<ExactRational> c;
  for (__int128 v : p) {
    bool neg = v < 0;
    unsigned __int128 a = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    ExactInt hi(static_cast<unsigned long>(a >> 64)), lo(static_cast<unsigned long>(a & ~0UL));
    ExactInt z = (hi << 64) + lo;
    c.emplace_back(neg ? ExactInt(-z) : z);
  }
  return ExactPoly(std::move(c));
}

}  // namespace

ExactPoly n_lambda(const Partition& lambda) {
  const int n = lambda.weight();
  // Sum over arrangements, grouped by alpha, of sign * prod_m (k + m - 1)_{u_m}.
  std::map<std::vector<int>, IntPoly> groups;
  std::vector<__int128> prod;
  for (const auto& u : arrangements(lambda)) {
    NormalForm nf = normalize_arrangement(u);
    if (nf.vanishes) continue;
    prod.assign(n + 1, 0);
    prod[0] = nf.sign;
    int deg = 0;
    for (int m = 1; m <= n; ++m) {
      for (int i = 0; i < u[m - 1]; ++i) {
        // multiply by (k + m - 1 - i)
        const __int128 c = m - 1 - i;
        for (int d = deg + 1; d >= 1; --d) prod[d] = prod[d - 1] + c * prod[d];
        prod[0] = c * prod[0];
        ++deg;
      }
    }
    IntPoly& g = groups[nf.alpha.parts()];
    if (g.empty()) g.assign(n + 1, 0);
    for (int d = 0; d <= n; ++d) g[d] += prod[d];
  }
  ExactPoly total;
  for (const auto& [alpha, poly] : groups) {
    ExactPoly f = to_exact(poly);
    if (f.is_zero()) continue;
    total += p_lambda_cached(Partition(alpha)) * f;
  }
  return total;
}

ExactRational n_lambda_direct(const Partition& lambda, long k) {
  if (k < 1) throw InvalidArgument("k must be positive");
  const int n = lambda.weight();
  auto inv_fact = [](long a) { return a < 0 ? ExactRational(0) : ExactRational(ExactInt(1), factorial(a)); };
  ExactRational sum = 0;
  for (const auto& u : arrangements(lambda)) {
    bool ok = true;
    for (int m = static_cast<int>(k) + 1; m <= n; ++m)
      if (u[m - 1] != 0) ok = false;
    if (!ok) continue;
    RationalMatrix mat(k, std::vector<ExactRational>(k));
    for (long m = 1; m <= k; ++m) {
      long shift = m <= n ? u[m - 1] : 0;
      long row = k - m;
      for (long j = 1; j <= k; ++j) mat[row][j - 1] = inv_fact(k + m - 1 - shift - 2 * (j - 1));
    }
    sum += det_rational(std::move(mat));
  }
  ExactRational pre = 1;
  for (long j = 0; j < k; ++j) pre *= ExactRational(factorial(k + j), factorial(2 * j));
  long half = k * (k - 1) / 2;
  ExactRational minus_half(half % 2 ? -1 : 1);
  minus_half /= ExactRational(ExactInt(1) << static_cast<unsigned long>(half));
  pre *= minus_half;
  pre *= ExactRational(ExactInt(1) << static_cast<unsigned long>(n));
  return pre * sum;
}

}  // namespace lfm

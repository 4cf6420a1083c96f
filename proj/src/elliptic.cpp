// SPDX-License-Identifier: Apache-2.0
#include "elliptic.hpp"

#include "errors.hpp"
#include "primes.hpp"

namespace lfm {

namespace {

long mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

long powmod(long b, long e, long p) {
  long r = 1;
  b = mod(b, p);
  while (e) {
    if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * b) % p);
    b = static_cast<long>((static_cast<__int128>(b) * b) % p);
    e >>= 1;
  }
  return r;
}

int legendre(long a, long p) {
  a = mod(a, p);
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace

long weierstrass_ap(const Weierstrass& w, long p) {
  if (!is_prime(p)) throw InvalidArgument("point count needs a prime");
  long count = 0;
  for (long x = 0; x < p; ++x) {
    long rhs = mod(mod(mod(x * x, p) * x, p) + w.a2 * mod(x * x, p) + w.a4 * x + w.a6, p);
    if (p == 2) {
      for (long y = 0; y < 2; ++y)
        if (mod(y * y + w.a1 * x * y + w.a3 * y - rhs, 2) == 0) ++count;
      continue;
    }
    // (2y + a1 x + a3)^2 = 4 rhs + (a1 x + a3)^2
    long b = mod(w.a1 * x + w.a3, p);
    count += 1 + legendre(4 * rhs + b * b, p);
  }
  return p - count;
}

long elliptic_ap(long p) { return weierstrass_ap(kCurve11a3, p); }

std::vector<long> elliptic_an(long n) {
  if (n < 1) throw InvalidArgument("bound must be positive");
  // prod (1 - q^m) by the pentagonal number theorem, as a sparse series up to q^n.
  std::vector<long> euler(n + 1, 0);
  for (long j = 0;; ++j) {
    bool any = false;
    for (long s : {j, -j}) {
      if (j == 0 && s == 0 && any) continue;
      long e = s * (3 * s - 1) / 2;
      if (e <= n) {
        euler[e] += (j % 2 ? -1 : 1);
        any = true;
      }
    }
    if (!any) break;
  }
  std::vector<long> sq(n + 1, 0);
  for (long i = 0; i <= n; ++i) {
    if (!euler[i]) continue;
    for (long j = 0; i + j <= n; ++j) sq[i + j] += euler[i] * euler[j];
  }
  // sq(q) * sq(q^11), shifted by q.
  std::vector<long> a(n + 1, 0);
  for (long i = 0; i + 1 <= n; ++i) {
    if (!sq[i]) continue;
    for (long j = 0; i + 11 * j + 1 <= n; ++j) a[i + 11 * j + 1] += sq[i] * sq[j];
  }
  return a;
}

}  // namespace lfm

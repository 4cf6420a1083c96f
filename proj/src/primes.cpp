// SPDX-License-Identifier: Apache-2.0
#include "primes.hpp"

#include "errors.hpp"

namespace lfm {

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (long i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> mobius_table(long n) {
  if (n < 0) throw InvalidArgument("negative bound");
  std::vector<int> mu(n + 1, 1);
  if (n >= 0) mu[0] = 0;
  std::vector<bool> composite(n + 1, false);
  for (long p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (long j = p; j <= n; j += p) {
      if (j > p) composite[j] = true;
      mu[j] = -mu[j];
    }
    for (long j = p * p; j <= n; j += p * p) mu[j] = 0;
  }
  return mu;
}

}  // namespace lfm

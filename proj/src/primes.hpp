// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace lfm {

// Primes <= n in increasing order.
std::vector<long> primes_up_to(long n);
bool is_prime(long n);
// mu(0..n)
std::vector<int> mobius_table(long n);

}  // namespace lfm

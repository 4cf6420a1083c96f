// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace lfm {

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
struct Weierstrass {
  long a1, a2, a3, a4, a6;
};

// Conductor 11 model isogenous to 11a1.
inline constexpr Weierstrass kCurve11a3{0, -1, 1, 0, 0};
// y^2 + y = x^3 - x, which has conductor 37.
inline constexpr Weierstrass kCurve37a{0, 0, 1, -1, 0};

// p minus the number of affine points over F_p.
long weierstrass_ap(const Weierstrass& w, long p);
// a(p) of the level 11 newform via the 11a3 model.
long elliptic_ap(long p);
// a(1..n) from q prod (1 - q^m)^2 (1 - q^{11 m})^2; index 0 unused.
std::vector<long> elliptic_an(long n);

}  // namespace lfm

#pragma once

// Independent reference computations used by the tests. Nothing here calls into the
// library's number theory beyond plain data types.

#include <cstdint>
#include <random>
#include <vector>

#include "g5rp/pipeline.hpp"

namespace oracle {

using i128 = __int128;

inline i128 mod(i128 a, i128 m) {
  a %= m;
  return a < 0 ? a + m : a;
}

inline int val(i128 x, long p) {
  if (x == 0) return 1 << 20;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Is the p-adic unit u (given mod p^prec, prec >= 1 for odd p, >= 3 for p = 2) a square?
inline bool unit_is_square(i128 u, long p) {
  if (p == 2) return mod(u, 8) == 1;
  long r = static_cast<long>(mod(u, p));
  for (long x = 1; x < p; ++x)
    if ((x * x) % p == r) return true;
  return false;
}

enum class Verdict { yes, no, unknown };

// c z^2 = F(u,v), F the degree 4 homogenization of f (integer coefficients, ascending),
// by enumerating P^1(Z/p^k): (u:1) for u mod p^k and (1:v) with p | v.
// A point decides itself when F(u,v) mod p^k fixes the square class of F/c for every lift.
inline Verdict brute_force_qp(long c, const std::vector<long>& f, long p, int k = 6) {
  i128 pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  int vc = val(c, p);
  i128 cu = c;
  for (int i = 0; i < vc; ++i) cu /= p;
  int need = p == 2 ? 3 : 1;
  bool all_decided = true;
  auto test = [&](i128 u, i128 v) -> int {  // 1 square, 0 not, -1 unknown
    i128 F = 0;
    i128 vpow[5], upow[5];
    upow[0] = vpow[0] = 1;
    for (int i = 1; i <= 4; ++i) {
      upow[i] = mod(upow[i - 1] * u, pk);
      vpow[i] = mod(vpow[i - 1] * v, pk);
    }
    for (int i = 0; i <= 4; ++i) {
      long ci = i < static_cast<int>(f.size()) ? f[i] : 0;
      F = mod(F + mod(static_cast<i128>(ci) * upow[i], pk) * vpow[4 - i], pk);
    }
    if (F == 0) return -1;
    int e = val(F, p);
    if (k - e < need) return -1;
    if ((e - vc) % 2 != 0) return 0;
    i128 unit = F;
    for (int i = 0; i < e; ++i) unit /= p;
    // unit / cu is a square iff unit * cu is
    return unit_is_square(unit * cu, p) ? 1 : 0;
  };
  for (i128 u = 0; u < pk; ++u) {
    int r = test(u, 1);
    if (r == 1) return Verdict::yes;
    if (r < 0) all_decided = false;
  }
  for (i128 v = 0; v < pk; v += p) {
    int r = test(1, v);
    if (r == 1) return Verdict::yes;
    if (r < 0) all_decided = false;
  }
  return all_decided ? Verdict::no : Verdict::unknown;
}

// Product of (t - r) for integer roots.
inline g5rp::QPoly poly_from_roots(const std::vector<g5rp::Rational>& roots) {
  g5rp::QPoly p({g5rp::Rational(1)});
  for (auto& r : roots) p = p * g5rp::QPoly({g5rp::Rational(-r), g5rp::Rational(1)});
  return p;
}

// Brute-force squarefree part by trial division up to |n|.
inline long squarefree_brute(long n) {
  long s = n < 0 ? -1 : 1;
  long m = n < 0 ? -n : n;
  for (long p = 2; p * p <= m; ++p)
    while (m % (p * p) == 0) m /= p * p;
  return s * m;
}

}  // namespace oracle

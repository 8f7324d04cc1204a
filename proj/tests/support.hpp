#pragma once

// Independent oracles and fixed-seed generators shared by the test binaries.
// Nothing here calls into the code under test for the quantity it checks.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "arithsurf/arithsurf.hpp"

namespace testsupport {

using arithsurf::Integer;
using arithsurf::Rational;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240607);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long bound) {
  long den = uniform(1, bound);
  return arithsurf::make_rational(uniform(-bound, bound), den);
}

/// Trial-division factorization; only for small test inputs.
inline std::map<Integer, long> factor(Integer n) {
  std::map<Integer, long> out;
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline long naive_valuation(Integer n, long p) {
  if (n == 0) return arithsurf::kInfiniteValuation;
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// Direct expansion x^4 + y^4 - z^4 - w^4 without the form machinery.
inline Integer fermat_value(const arithsurf::ProjectivePoint& p) {
  auto q = [](const Integer& v) -> Integer { return v * v * v * v; };
  return q(p[0]) + q(p[1]) - q(p[2]) - q(p[3]);
}

inline Integer enriques_value(const arithsurf::ProjectivePoint& p) {
  const auto &a0 = p[0], &a1 = p[1], &a2 = p[2], &a3 = p[3];
  return a0 * a2 * a2 * a2 * a2 + a1 * a3 * a3 * a3 * a3 - a0 * a0 * a1 * a1 * a1 - a0 * a0 * a0 * a1 * a1;
}

/// t(x^2+y^2) - (lead z - 7t)(z^2 - 2t^2) over (t:x:y:z).
inline Integer chatelet_value(long lead, const arithsurf::ProjectivePoint& p) {
  const auto &t = p[0], &x = p[1], &y = p[2], &z = p[3];
  return t * (x * x + y * y) - (lead * z - 7 * t) * (z * z - 2 * t * t);
}

inline bool markoff_holds(std::int64_t x, std::int64_t y, std::int64_t z) {
  using W = __int128;
  return W(x) * x + W(y) * y + W(z) * z == W(3) * x * y * z;
}

/// O(B^2) scan over x <= y <= z with z from the quadratic formula checked exactly.
inline std::set<arithsurf::markoff::MarkoffTriple> brute_markoff(std::int64_t bound) {
  std::set<arithsurf::markoff::MarkoffTriple> out;
  for (std::int64_t x = 1; x <= bound; ++x) {
    for (std::int64_t y = x; y <= bound; ++y) {
      for (std::int64_t z = y; z <= bound; ++z) {
        if (markoff_holds(x, y, z)) out.insert({x, y, z});
        if (__int128(z) * z > __int128(3) * x * y * z) break;
      }
    }
  }
  return out;
}

/// A target (xi, mu, lambda) on X_A over F_ell by direct search over residues.
inline arithsurf::chatelet::ResidueTarget random_target(std::uint64_t ell) {
  using arithsurf::Residue;
  while (true) {
    long lv = uniform(0, static_cast<long>(ell) - 1);
    Residue l(lv, ell);
    Residue four(4, ell);
    if (four * l == Residue(25, ell) || four * l == Residue(-11, ell)) continue;
    Residue fl = ((Residue(4, ell) * l - Residue(7, ell)) * l - Residue(8, ell)) * l + Residue(14, ell);
    if (fl.is_zero()) continue;
    long xv = uniform(0, static_cast<long>(ell) - 1);
    Residue xi(xv, ell);
    Residue rest = fl - xi * xi;
    for (long yv = 0; yv < static_cast<long>(ell); ++yv) {
      Residue mu(yv, ell);
      if (mu * mu == rest) return {ell, xi, mu, l};
    }
  }
}

}  // namespace testsupport

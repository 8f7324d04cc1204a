#ifndef ARITHSURF_MARKOFF_HPP
#define ARITHSURF_MARKOFF_HPP

// Positive integral points of the Markoff surface x^2 + y^2 + z^2 = 3xyz.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "arithsurf/error.hpp"
#include "arithsurf/parallel.hpp"

namespace arithsurf::markoff {

/// Sorted ascending.
struct MarkoffTriple {
  std::int64_t x, y, z;

  static MarkoffTriple sorted(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::array<std::int64_t, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2]};
  }

  friend auto operator<=>(const MarkoffTriple&, const MarkoffTriple&) = default;
};

/// Bounds keep 3xyz and the discriminant inside 128-bit arithmetic.
inline constexpr std::int64_t kMaxBound = 1'000'000'000;

inline bool satisfies(const MarkoffTriple& t) {
  using W = __int128;
  return W(t.x) * t.x + W(t.y) * t.y + W(t.z) * t.z == W(3) * t.x * t.y * t.z;
}

/// Replace one coordinate c by 3 * (product of the others) - c.
inline std::set<MarkoffTriple> vieta_moves(const MarkoffTriple& t) {
  if (t.x <= 0 || !satisfies(t)) throw Error(ErrorKind::kPrecondition, "not a positive Markoff triple");
  std::set<MarkoffTriple> out;
  const std::array<std::int64_t, 3> v{t.x, t.y, t.z};
  for (int i = 0; i < 3; ++i) {
    const std::int64_t a = v[(i + 1) % 3], b = v[(i + 2) % 3];
    const std::int64_t replaced = 3 * a * b - v[static_cast<std::size_t>(i)];
    if (replaced <= 0) continue;
    auto moved = MarkoffTriple::sorted(a, b, replaced);
    if (moved != t) out.insert(moved);
  }
  return out;
}

/// Closure of (1,1,1) under Vieta moves, pruned to max coordinate <= bound.
inline std::set<MarkoffTriple> orbit(std::int64_t bound) {
  if (bound < 1 || bound > kMaxBound) throw Error(ErrorKind::kPrecondition, "bound out of range");
  std::set<MarkoffTriple> seen{{1, 1, 1}};
  std::deque<MarkoffTriple> queue{{1, 1, 1}};
  while (!queue.empty()) {
    auto t = queue.front();
    queue.pop_front();
    for (const auto& n : vieta_moves(t)) {
      if (n.z > bound) continue;
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  return seen;
}

/// Direct scan over x <= y, solving z^2 - 3xy z + x^2 + y^2 = 0 for integral z in [y, bound].
inline std::set<MarkoffTriple> exhaustive_solutions(std::int64_t bound, unsigned workers = 1) {
  if (bound < 1 || bound > kMaxBound) throw Error(ErrorKind::kPrecondition, "bound out of range");
  using W = __int128;
  // Past x^2 > 2 bound / 3 the first y >= x already triggers the break below.
  std::int64_t x_max = 1;
  while (W(3) * (x_max + 1) * (x_max + 1) <= W(2) * bound) ++x_max;
  std::vector<std::vector<MarkoffTriple>> parts(static_cast<std::size_t>(x_max));
  parallel_for(1, x_max + 1, workers, [&](long xl) {
    const std::int64_t x = xl;
    auto& out = parts[static_cast<std::size_t>(x - 1)];
    for (std::int64_t y = x; y <= bound; ++y) {
      const W p = W(3) * x * y;
      // For y >= 2 the smaller root (x^2+y^2)/z+ is below y, and the larger
      // root is at least 3xy/2, which only grows with y.
      if (y >= 2 && p > W(2) * bound) break;
      const W disc = p * p - W(4) * (W(x) * x + W(y) * y);
      if (disc < 0) continue;
      auto r = static_cast<W>(std::sqrt(static_cast<long double>(disc)));
      while (r * r > disc) --r;
      while ((r + 1) * (r + 1) <= disc) ++r;
      if (r * r != disc) continue;
      for (W num : {p - r, p + r}) {
        if (num % 2 != 0) continue;
        const W z = num / 2;
        if (z < y || z > bound) continue;
        MarkoffTriple t{x, y, static_cast<std::int64_t>(z)};
        if (satisfies(t)) out.push_back(t);
      }
    }
  });
  std::set<MarkoffTriple> all;
  for (const auto& v : parts) all.insert(v.begin(), v.end());
  return all;
}

/// Every solution up to the bound lies in the orbit of (1,1,1).
inline bool verify_single_orbit(std::int64_t bound, unsigned workers = 1) {
  return orbit(bound) == exhaustive_solutions(bound, workers);
}

}  // namespace arithsurf::markoff

#endif  // ARITHSURF_MARKOFF_HPP

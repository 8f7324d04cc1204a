#ifndef ARITHSURF_LINALG_HPP
#define ARITHSURF_LINALG_HPP

#include <vector>

#include "arithsurf/exactnum.hpp"

namespace arithsurf {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Rank over Q of an integer matrix by Bareiss fraction-free elimination.
/// Every intermediate entry stays an integer (exact division by the previous
/// pivot), so no rational reconstruction is needed.
inline std::size_t exact_rank(IntegerMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Integer& p = m[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        Integer v = p * m[r][c] - m[r][col] * m[rank][c];
        mpz_divexact(m[r][c].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

/// All exponent tuples of total degree `degree` in `nvars` variables, in a
/// fixed (lexicographically decreasing) order.
inline std::vector<std::vector<unsigned>> monomial_exponents(std::size_t nvars, unsigned degree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nvars > 0) rec(rec, 0, degree);
  return out;
}

}  // namespace arithsurf

#endif  // ARITHSURF_LINALG_HPP

// Finds a rational point of t(x^2+y^2) = (4z-7t)(z^2-2t^2) with prescribed
// reductions mod 101 and mod 103.
#include <iostream>
#include <vector>

#include "arithsurf/arithsurf.hpp"

using namespace arithsurf;
using namespace arithsurf::chatelet;

namespace {

// First smooth-fiber residue point with lambda >= start, found by direct search.
ResidueTarget first_target(std::uint64_t ell, long start) {
  for (long lv = start;; ++lv) {
    Residue l(lv, ell);
    Residue fl = ((Residue(4L, ell) * l - Residue(7L, ell)) * l - Residue(8L, ell)) * l + Residue(14L, ell);
    if (fl.is_zero()) continue;
    for (long xv = 0; xv < static_cast<long>(ell); ++xv) {
      Residue xi(xv, ell);
      auto mu = sqrt_mod(fl - xi * xi);
      if (!mu) continue;
      ResidueTarget t{ell, xi, *mu, l};
      try {
        validate_target(t);
        return t;
      } catch (const Error&) {
      }
    }
  }
}

}  // namespace

int main() {
  std::vector<ResidueTarget> targets{first_target(101, 10), first_target(103, 40)};
  for (const auto& t : targets) {
    std::cout << "mod " << t.ell << ": (xi, mu, lambda) = (" << t.xi.value() << ", " << t.mu.value() << ", "
              << t.lambda.value() << ")\n";
  }
  auto p = wwap_solve(targets);
  std::cout << "point " << p.to_string() << (on_X(surface_a(), p) ? " on X_A\n" : " NOT on X_A\n");
}

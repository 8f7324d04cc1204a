#ifndef ARITHSURF_FERMAT_HPP
#define ARITHSURF_FERMAT_HPP

// The Fermat quartic x^4 + y^4 = z^4 + w^4 and its two elliptic pencils:
//   lambda-pencil: planes w - y = lambda (x - z) through the line x=z, y=w,
//   mu-pencil:     planes x - w = mu (y + z)     through the line x=w, y=-z.
// Fibers are plane cubics in (x:y:z); w is recovered from the plane equation.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arithsurf/cubic_group.hpp"
#include "arithsurf/linalg.hpp"

namespace arithsurf::fermat {

inline Polynomial quartic_polynomial() {
  auto v = Polynomial::variables(4);
  return v[0].pow(4) + v[1].pow(4) - v[2].pow(4) - v[3].pow(4);
}

inline const HomogeneousForm& quartic() {
  static const HomogeneousForm form(quartic_polynomial());
  return form;
}

inline bool on_surface(const ProjectivePoint& p) {
  if (p.size() != 4) throw Error(ErrorKind::kArityMismatch, "Fermat quartic point needs 4 coordinates");
  return evaluate_form(quartic(), p) == 0;
}

struct FiberCoordinates {
  std::optional<Rational> lambda;
  std::optional<Rational> mu;
};

/// lambda = (w-y)/(x-z) and mu = (w-x)/(y+z), each absent where undefined.
inline FiberCoordinates fiber_coords(const ProjectivePoint& p) {
  if (!on_surface(p)) throw Error(ErrorKind::kPrecondition, "point " + p.to_string() + " is not on F");
  const auto& c = p.coords();
  FiberCoordinates out;
  if (c[0] != c[2]) out.lambda = make_rational(c[3] - c[1], c[0] - c[2]);
  if (c[1] != -c[2]) out.mu = make_rational(c[3] - c[0], c[1] + c[2]);
  return out;
}

/// A line as the common zero set of two linear forms in (x, y, z, w).
struct RationalLine {
  std::array<long, 4> first;
  std::array<long, 4> second;
};

/// x = +-z, y = +-w and x = +-w, y = +-z.
inline std::vector<RationalLine> rational_lines() {
  std::vector<RationalLine> lines;
  for (long s : {1L, -1L}) {
    for (long t : {1L, -1L}) {
      lines.push_back({{1, 0, -s, 0}, {0, 1, 0, -t}});
      lines.push_back({{1, 0, 0, -s}, {0, 1, -t, 0}});
    }
  }
  return lines;
}

/// Polynomial identity check: the form vanishes on a parametrization of the line.
inline bool line_lies_on(const HomogeneousForm& form, const RationalLine& line) {
  // Each line here solves for x and y in terms of (z, w).
  auto v = Polynomial::variables(2);  // z, w
  auto solve = [&](const std::array<long, 4>& lf) {
    // lf = a x + b y + c z + d w with exactly one of a, b nonzero.
    Polynomial rest = Rational(-lf[2]) * v[0] + Rational(-lf[3]) * v[1];
    return std::pair{lf[0] != 0 ? 0 : 1, make_rational(1, lf[0] != 0 ? lf[0] : lf[1]) * rest};
  };
  auto [i1, p1] = solve(line.first);
  auto [i2, p2] = solve(line.second);
  if (i1 == i2) throw Error(ErrorKind::kPrecondition, "line not in solved form");
  std::vector<Polynomial> images(4, Polynomial(2));
  images[static_cast<std::size_t>(i1)] = p1;
  images[static_cast<std::size_t>(i2)] = p2;
  images[2] = v[0];
  images[3] = v[1];
  return form.to_polynomial().compose(images).is_zero();
}

/// The fibers over lambda with lambda (lambda^8 - 1) = 0 are singular.
inline bool is_degenerate_parameter(const Rational& l) {
  return l == 0 || pow(l, 8) == 1;
}

/// E_lambda in plane coordinates (x:y:z):
/// x^3+x^2z+xz^2+z^3 - 4l y^3 - 6l^2 y^2(x-z) - 4l^3 y(x-z)^2 - l^4 (x-z)^3.
inline Polynomial lambda_cubic_polynomial(const Rational& l) {
  auto v = Polynomial::variables(3);
  const auto &x = v[0], &y = v[1], &z = v[2];
  Polynomial d = x - z;
  return x.pow(3) + x.pow(2) * z + x * z.pow(2) + z.pow(3) - Rational(4 * l) * y.pow(3) -
         Rational(6 * pow(l, 2)) * y.pow(2) * d - Rational(4 * pow(l, 3)) * y * d.pow(2) - pow(l, 4) * d.pow(3);
}

/// E'_mu in plane coordinates (x:y:z), with u = mu (y+z):
/// y^3 - y^2 z + y z^2 - z^3 + mu (4x^3 - 6x^2 u + 4x u^2 - u^3).
inline Polynomial mu_cubic_polynomial(const Rational& m) {
  auto v = Polynomial::variables(3);
  const auto &x = v[0], &y = v[1], &z = v[2];
  Polynomial u = m * (y + z);
  return y.pow(3) - y.pow(2) * z + y * z.pow(2) - z.pow(3) +
         m * (Rational(4) * x.pow(3) - Rational(6) * x.pow(2) * u + Rational(4) * x * u.pow(2) - u.pow(3));
}

struct LambdaFiber {
  Rational lambda;
  GroupContext ctx;
  ProjectivePoint section;
};

struct MuFiber {
  Rational mu;
  GroupContext ctx;
  ProjectivePoint section;
};

/// Origin from the line x=-z, y=-w; section from the line x=w, y=-z.
inline LambdaFiber lambda_fiber(const Rational& l, GroupLimits limits = {}) {
  if (is_degenerate_parameter(l)) throw Error(ErrorKind::kSingularFiber, "lambda = " + to_string(l));
  PlaneCubic cubic(lambda_cubic_polynomial(l));
  auto origin = ProjectivePoint::from_rationals({Rational(1), Rational(-l), Rational(-1)});
  auto section = ProjectivePoint::from_rationals({Rational(l + 1), Rational(1 - l), Rational(l - 1)});
  if (cubic.is_singular_at(section)) throw Error(ErrorKind::kSingularFiber, "section singular, lambda = " + to_string(l));
  return {l, GroupContext(std::move(cubic), std::move(origin), limits), std::move(section)};
}

/// Origin p_m = (1+m:1-m:1+m:1-m) from the line x=z, y=w; section
/// q_m = (m-1:m+1:1-m:-1-m) from the line x=-z, y=-w.
inline MuFiber mu_fiber(const Rational& m, GroupLimits limits = {}) {
  if (is_degenerate_parameter(m)) throw Error(ErrorKind::kSingularFiber, "mu = " + to_string(m));
  PlaneCubic cubic(mu_cubic_polynomial(m));
  auto origin = ProjectivePoint::from_rationals({Rational(1 + m), Rational(1 - m), Rational(1 + m)});
  auto section = ProjectivePoint::from_rationals({Rational(m - 1), Rational(m + 1), Rational(1 - m)});
  if (cubic.is_singular_at(origin) || cubic.is_singular_at(section)) {
    throw Error(ErrorKind::kSingularFiber, "mu = " + to_string(m));
  }
  return {m, GroupContext(std::move(cubic), std::move(origin), limits), std::move(section)};
}

namespace detail {
inline ProjectivePoint checked_on_f(ProjectivePoint p) {
  if (!on_surface(p)) throw Error(ErrorKind::kInternal, "embedded point " + p.to_string() + " is not on F");
  return p;
}
}  // namespace detail

/// Appends w = y + l (x - z).
inline ProjectivePoint embed_lambda(const Rational& l, const ProjectivePoint& plane_pt) {
  const auto& c = plane_pt.coords();
  if (c.size() != 3) throw Error(ErrorKind::kArityMismatch, "plane point needs 3 coordinates");
  Rational w = Rational(c[1]) + l * Rational(c[0] - c[2]);
  return detail::checked_on_f(ProjectivePoint::from_rationals({Rational(c[0]), Rational(c[1]), Rational(c[2]), w}));
}

/// Appends w = x - m (y + z).
inline ProjectivePoint embed_mu(const Rational& m, const ProjectivePoint& plane_pt) {
  const auto& c = plane_pt.coords();
  if (c.size() != 3) throw Error(ErrorKind::kArityMismatch, "plane point needs 3 coordinates");
  Rational w = Rational(c[0]) - m * Rational(c[1] + c[2]);
  return detail::checked_on_f(ProjectivePoint::from_rationals({Rational(c[0]), Rational(c[1]), Rational(c[2]), w}));
}

/// Multiples 1..count of the section on the lambda-fiber, embedded in F.
inline std::vector<ProjectivePoint> generate_lambda_points(const Rational& l, long count, GroupLimits limits = {}) {
  if (count < 0) throw Error(ErrorKind::kPrecondition, "negative count");
  if (count > limits.max_multiplier) throw Error(ErrorKind::kCapExceeded, "count exceeds the multiple cap");
  auto fiber = lambda_fiber(l, limits);
  if (fiber.ctx.is_torsion(fiber.section)) throw Error(ErrorKind::kTorsionFiber, "lambda = " + to_string(l));
  std::vector<ProjectivePoint> out;
  ProjectivePoint current = fiber.section;
  for (long n = 1; n <= count; ++n) {
    if (n > 1) current = fiber.ctx.add(current, fiber.section);
    out.push_back(embed_lambda(l, current));
  }
  return out;
}

enum class Fibration { kLambda, kMu };

struct ComposeStep {
  Fibration fibration;
  long multiplier;
};

/// Applies [n] inside the lambda- or mu-fiber through the current point, step by step.
inline ProjectivePoint compose_generate(const ProjectivePoint& seed, std::span<const ComposeStep> pattern,
                                        GroupLimits limits = {}) {
  ProjectivePoint current = seed;
  for (const auto& step : pattern) {
    auto coords = fiber_coords(current);
    const auto& c = current.coords();
    ProjectivePoint plane({c[0], c[1], c[2]});
    if (step.fibration == Fibration::kLambda) {
      if (!coords.lambda) throw Error(ErrorKind::kUndefinedFiberCoordinate, "lambda undefined at " + current.to_string());
      auto fiber = lambda_fiber(*coords.lambda, limits);
      current = embed_lambda(*coords.lambda, fiber.ctx.multiply(step.multiplier, plane));
    } else {
      if (!coords.mu) throw Error(ErrorKind::kUndefinedFiberCoordinate, "mu undefined at " + current.to_string());
      // The point lies on the plane x - w = m(y + z) with m = -mu.
      const Rational m = -*coords.mu;
      auto fiber = mu_fiber(m, limits);
      current = embed_mu(m, fiber.ctx.multiply(step.multiplier, plane));
    }
  }
  return current;
}

/// Dimension of the space of degree-d forms in 4 variables vanishing at every
/// point. 0 means no degree-d surface contains the sample.
inline std::size_t density_certificate(std::span<const ProjectivePoint> points, unsigned degree) {
  if (degree < 1) throw Error(ErrorKind::kPrecondition, "degree must be at least 1");
  auto monomials = monomial_exponents(4, degree);
  IntegerMatrix rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != 4) throw Error(ErrorKind::kArityMismatch, "density certificate needs points of P^3");
    std::vector<Integer> row;
    row.reserve(monomials.size());
    for (const auto& e : monomials) {
      Integer v = 1;
      for (std::size_t i = 0; i < 4; ++i) {
        if (e[i]) v *= pow(p[i], e[i]);
      }
      row.push_back(std::move(v));
    }
    rows.push_back(std::move(row));
  }
  return monomials.size() - exact_rank(std::move(rows));
}

}  // namespace arithsurf::fermat

#endif  // ARITHSURF_FERMAT_HPP

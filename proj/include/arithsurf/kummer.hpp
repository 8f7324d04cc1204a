#ifndef ARITHSURF_KUMMER_HPP
#define ARITHSURF_KUMMER_HPP

// Kummer surface of E1 x E2, birationally f2(x2) = w^2 f1(x1). Through rational
// points (a1,b1), (a2,b2) on y^2 = f_i(x) the plane cubic
//   b1^2 f2(x2) - b2^2 f1(x1) = 0
// carries the origin (a1, a2) and a second point from the tangent there.
// Its multiples give surface points with w = b2/b1 where typically f1(x1) is
// not a square: points that do not come from E1 x E2.

#include <array>
#include <vector>

#include "arithsurf/cubic_group.hpp"

namespace arithsurf::kummer {

using Cubic = std::array<Rational, 4>;  // coefficients, highest degree first

inline Rational evaluate(const Cubic& f, const Rational& x) { return ((f[0] * x + f[1]) * x + f[2]) * x + f[3]; }

/// Discriminant of a x^3 + b x^2 + c x + d.
inline Rational discriminant(const Cubic& f) {
  const auto &a = f[0], &b = f[1], &c = f[2], &d = f[3];
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
}

struct EllipticCubicData {
  Cubic f;
  Rational a;
  Rational b;
};

inline EllipticCubicData make_cubic_data(Cubic f, Rational a, Rational b) {
  if (f[0] == 0) throw Error(ErrorKind::kPrecondition, "leading coefficient is zero");
  if (discriminant(f) == 0) throw Error(ErrorKind::kPrecondition, "cubic has a repeated root");
  if (b == 0) throw Error(ErrorKind::kPrecondition, "point has b = 0");
  if (b * b != evaluate(f, a)) throw Error(ErrorKind::kPrecondition, "b^2 != f(a)");
  return {std::move(f), std::move(a), std::move(b)};
}

struct ZCurveContext {
  GroupContext ctx;
  EllipticCubicData d1;
  EllipticCubicData d2;
};

/// The cubic b1^2 f2(x2) - b2^2 f1(x1) in (x1 : x2 : w) with origin (a1 : a2 : 1).
inline ZCurveContext z_curve(const EllipticCubicData& d1, const EllipticCubicData& d2, GroupLimits limits = {}) {
  if (d1.f == d2.f && d1.b * d1.b == d2.b * d2.b) {
    throw Error(ErrorKind::kReducible, "identical data on both sides: the curve contains x1 = x2");
  }
  auto v = Polynomial::variables(3);
  const auto &x1 = v[0], &x2 = v[1], &w = v[2];
  auto homog = [&](const Cubic& f, const Polynomial& x) {
    return f[0] * x.pow(3) + f[1] * x.pow(2) * w + f[2] * x * w.pow(2) + f[3] * w.pow(3);
  };
  Polynomial cubic = Rational(d1.b * d1.b) * homog(d2.f, x2) - Rational(d2.b * d2.b) * homog(d1.f, x1);
  auto origin = ProjectivePoint::from_rationals({d1.a, d2.a, Rational(1)});
  return {GroupContext(PlaneCubic(cubic), std::move(origin), limits), d1, d2};
}

/// O * O: the residual point of the tangent at the origin.
inline ProjectivePoint tangent_section(const ZCurveContext& z) {
  return third_intersection(z.ctx.curve(), z.ctx.origin(), z.ctx.origin());
}

/// f2(u2) = w^2 f1(u1) with f1(u1) not a rational square.
struct Witness {
  Rational u1;
  Rational u2;
  Rational w;
};

struct WitnessReport {
  std::vector<Witness> retained;
  long examined = 0;
  long filtered = 0;
};

inline WitnessReport generate_witnesses(const ZCurveContext& z, long count) {
  if (count < 1) throw Error(ErrorKind::kPrecondition, "count must be positive");
  if (count > z.ctx.limits().max_multiplier) throw Error(ErrorKind::kCapExceeded, "count exceeds the multiple cap");
  const ProjectivePoint section = tangent_section(z);
  if (z.ctx.is_torsion(section)) throw Error(ErrorKind::kTorsionFiber, "tangent section is torsion");
  const Rational ratio = z.d2.b / z.d1.b;
  WitnessReport report;
  ProjectivePoint current = section;
  for (long n = 1; n <= count; ++n) {
    if (n > 1) current = z.ctx.add(current, section);
    ++report.examined;
    if (current[2] == 0) {
      ++report.filtered;
      continue;
    }
    Rational u1 = make_rational(current[0], current[2]);
    Rational u2 = make_rational(current[1], current[2]);
    Rational f1 = evaluate(z.d1.f, u1);
    if (f1 == 0 || is_rational_square(f1)) {
      ++report.filtered;
      continue;
    }
    if (evaluate(z.d2.f, u2) != ratio * ratio * f1) throw Error(ErrorKind::kInternal, "witness off the surface");
    report.retained.push_back({std::move(u1), std::move(u2), ratio});
  }
  if (report.retained.empty()) throw Error(ErrorKind::kExhausted, "every multiple was filtered");
  return report;
}

}  // namespace arithsurf::kummer

#endif  // ARITHSURF_KUMMER_HPP

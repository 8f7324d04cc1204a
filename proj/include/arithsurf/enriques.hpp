#ifndef ARITHSURF_ENRIQUES_HPP
#define ARITHSURF_ENRIQUES_HPP

// The quintic E: x0 x2^4 + x1 x3^4 = x0^2 x1^3 + x0^3 x1^2, the map from the
// Fermat quartic, and the lifting property: for every rational point one of
// +x0x1, -x0x1 is a square, so the point lifts to x0x1 = x4^2 or x0x1 = -x4^2.

#include <map>
#include <optional>
#include <vector>

#include "arithsurf/fermat.hpp"
#include "arithsurf/parallel.hpp"

namespace arithsurf::enriques {

inline Polynomial quintic_polynomial() {
  auto x = Polynomial::variables(4);
  return x[0] * x[2].pow(4) + x[1] * x[3].pow(4) - x[0].pow(2) * x[1].pow(3) - x[0].pow(3) * x[1].pow(2);
}

inline const HomogeneousForm& quintic() {
  static const HomogeneousForm form(quintic_polynomial());
  return form;
}

inline bool on_E(const ProjectivePoint& p) {
  if (p.size() != 4) throw Error(ErrorKind::kArityMismatch, "point of E needs 4 coordinates");
  return evaluate_form(quintic(), p) == 0;
}

/// (x:y:z:w) -> (x^4 : y^4 : x y^2 z : x^2 y w).
inline ProjectivePoint push_from_F(const ProjectivePoint& p) {
  if (!fermat::on_surface(p)) throw Error(ErrorKind::kPrecondition, "point " + p.to_string() + " is not on F");
  const auto &x = p[0], &y = p[1], &z = p[2], &w = p[3];
  std::vector<Integer> image{pow(x, 4), pow(y, 4), x * y * y * z, x * x * y * w};
  if (std::all_of(image.begin(), image.end(), [](const Integer& c) { return c == 0; })) {
    throw Error(ErrorKind::kInternal, "pushforward of " + p.to_string() + " vanishes");
  }
  ProjectivePoint q(std::move(image));
  if (!on_E(q)) throw Error(ErrorKind::kInternal, "pushforward left E");
  return q;
}

enum class Cover { kPlus, kMinus, kDegenerate };

inline std::string_view to_string(Cover c) {
  switch (c) {
    case Cover::kPlus: return "plus";
    case Cover::kMinus: return "minus";
    case Cover::kDegenerate: return "degenerate";
  }
  return "?";
}

/// plus: witness^2 = a0 a1; minus: witness^2 = -a0 a1; degenerate: a0 a1 = 0.
struct LiftResult {
  Cover cover;
  std::optional<Integer> witness;
};

inline LiftResult lift_check(const ProjectivePoint& p) {
  if (!on_E(p)) throw Error(ErrorKind::kPrecondition, "point " + p.to_string() + " is not on E");
  const Integer n = p[0] * p[1];
  if (n == 0) return {Cover::kDegenerate, std::nullopt};
  if (auto r = integer_sqrt_if_square(n)) return {Cover::kPlus, *r};
  if (auto r = integer_sqrt_if_square(-n)) return {Cover::kMinus, *r};
  throw Error(ErrorKind::kTheoremViolation, "neither +a0a1 nor -a0a1 is a square at " + p.to_string());
}

/// Parity of v_p(a0 a1) at every prime, without factoring: over a coprime
/// base whose elements are not squares, each base element b carries a prime
/// of odd valuation, so v_p(a0 a1) is even for all p | b iff the b-exponents
/// of a0 and a1 sum to an even number.
inline bool valuation_parity_check(const ProjectivePoint& p) {
  if (!on_E(p)) throw Error(ErrorKind::kPrecondition, "point " + p.to_string() + " is not on E");
  if (p[0] * p[1] == 0) throw Error(ErrorKind::kDegenerate, "a0 a1 = 0 at " + p.to_string());
  std::vector<Integer> base = coprime_base(std::span<const Integer>(p.coords()));
  for (auto& b : base) {
    while (auto r = integer_sqrt_if_square(b)) b = *r;
  }
  for (const auto& b : base) {
    long e0 = padic_valuation(p[0], b);
    long e1 = padic_valuation(p[1], b);
    if ((e0 + e1) % 2 != 0) return false;
  }
  return true;
}

struct ScanReport {
  std::vector<ProjectivePoint> points;
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t degenerate = 0;
  std::vector<ProjectivePoint> violations;
};

/// All normalized integer points of E with |a_i| <= height. For a1 != 0 the
/// last coordinate is solved from a3^4 = (a0^2 a1^3 + a0^3 a1^2 - a0 a2^4)/a1.
inline std::vector<ProjectivePoint> points_up_to_height(long height, unsigned workers = 1) {
  if (height < 1) throw Error(ErrorKind::kPrecondition, "height must be positive");
  const long span_len = 2 * height + 1;
  std::vector<std::vector<ProjectivePoint>> per_a0(static_cast<std::size_t>(height + 1));
  parallel_for(0, height + 1, workers, [&](long a0) {
    auto& out = per_a0[static_cast<std::size_t>(a0)];
    auto emit = [&](long a1, long a2, const Integer& a3) {
      if (a0 == 0 && a1 == 0 && a2 == 0 && a3 == 0) return;
      std::vector<Integer> raw{Integer(a0), Integer(a1), Integer(a2), a3};
      ProjectivePoint pt(raw);
      if (pt.coords() == raw) out.push_back(std::move(pt));
    };
    for (long i1 = 0; i1 < span_len; ++i1) {
      const long a1 = i1 - height;
      for (long i2 = 0; i2 < span_len; ++i2) {
        const long a2 = i2 - height;
        if (a1 == 0) {
          if (a0 != 0 && a2 != 0) continue;
          for (long a3 = -height; a3 <= height; ++a3) emit(a1, a2, Integer(a3));
          continue;
        }
        Integer A0(a0), A1(a1), A2(a2);
        Integer num = A0 * A0 * A1 * A1 * A1 + A0 * A0 * A0 * A1 * A1 - A0 * pow(A2, 4);
        if (!mpz_divisible_p(num.get_mpz_t(), A1.get_mpz_t())) continue;
        Integer q = num / A1;
        if (q < 0) continue;
        Integer r;
        if (mpz_root(r.get_mpz_t(), q.get_mpz_t(), 4) == 0) continue;
        if (r > height) continue;
        emit(a1, a2, r);
        if (r != 0) emit(a1, a2, Integer(-r));
      }
    }
  });
  std::vector<ProjectivePoint> all;
  for (auto& v : per_a0) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  return all;
}

inline ScanReport scan(long height, unsigned workers = 1) {
  ScanReport report;
  report.points = points_up_to_height(height, workers);
  for (const auto& p : report.points) {
    try {
      switch (lift_check(p).cover) {
        case Cover::kPlus: ++report.plus; break;
        case Cover::kMinus: ++report.minus; break;
        case Cover::kDegenerate: ++report.degenerate; break;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kTheoremViolation) throw;
      report.violations.push_back(p);
    }
  }
  return report;
}

}  // namespace arithsurf::enriques

#endif  // ARITHSURF_ENRIQUES_HPP

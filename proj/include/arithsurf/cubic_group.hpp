#ifndef ARITHSURF_CUBIC_GROUP_HPP
#define ARITHSURF_CUBIC_GROUP_HPP

// Chord-tangent group law on plane cubics with an arbitrary rational origin.
//
// For a cubic form F and points P, Q the restriction to the line sP + tQ is
//   F(P) s^3 + (grad F(P).Q) s^2 t + (grad F(Q).P) s t^2 + F(Q) t^3,
// so once the known roots are divided out the residual point has a closed
// form in the two polar values. Everything stays in integer coordinates.

#include <optional>
#include <utility>

#include "arithsurf/forms.hpp"

namespace arithsurf {

class PlaneCubic {
 public:
  explicit PlaneCubic(HomogeneousForm form) : form_(std::move(form)) {
    if (form_.nvars() != 3 || form_.degree() != 3) {
      throw Error(ErrorKind::kPrecondition, "plane cubic needs a degree-3 form in 3 variables");
    }
  }

  explicit PlaneCubic(const Polynomial& p) : PlaneCubic(HomogeneousForm(p)) {}

  const HomogeneousForm& form() const { return form_; }

  bool contains(const ProjectivePoint& p) const { return evaluate_form(form_, p) == 0; }

  bool is_singular_at(const ProjectivePoint& p) const {
    for (const auto& g : form_.gradient(p.coords())) {
      if (g != 0) return false;
    }
    return true;
  }

 private:
  HomogeneousForm form_;
};

inline bool on_curve(const PlaneCubic& c, const ProjectivePoint& p) {
  if (p.size() != 3) throw Error(ErrorKind::kArityMismatch, "plane cubic point needs 3 coordinates");
  return c.contains(p);
}

namespace detail {

inline Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::vector<Integer> cross(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline bool is_zero_vector(const std::vector<Integer>& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline std::vector<Integer> combine(const Integer& a, const std::vector<Integer>& p, const Integer& b,
                                    const std::vector<Integer>& q) {
  return {a * p[0] + b * q[0], a * p[1] + b * q[1], a * p[2] + b * q[2]};
}

}  // namespace detail

/// Residual intersection P*Q of the line through P and Q (the tangent when
/// P = Q) with the cubic, counted with multiplicity.
inline ProjectivePoint third_intersection(const PlaneCubic& c, const ProjectivePoint& p, const ProjectivePoint& q) {
  if (!on_curve(c, p) || !on_curve(c, q)) {
    throw Error(ErrorKind::kPrecondition, "third_intersection: point not on the cubic");
  }
  const auto& f = c.form();
  const auto gp = f.gradient(p.coords());
  if (detail::is_zero_vector(gp)) throw Error(ErrorKind::kSingularPoint, "singular point " + p.to_string());

  std::vector<Integer> result;
  if (!(p == q)) {
    const auto gq = f.gradient(q.coords());
    if (detail::is_zero_vector(gq)) throw Error(ErrorKind::kSingularPoint, "singular point " + q.to_string());
    const Integer b = detail::dot(gp, q.coords());
    const Integer cc = detail::dot(gq, p.coords());
    if (b == 0 && cc == 0) throw Error(ErrorKind::kLineComponent, "chord is a component of the cubic");
    result = detail::combine(cc, p.coords(), -b, q.coords());
  } else {
    // Direction on the tangent line grad F(P).X = 0 independent of P.
    std::vector<Integer> dir;
    for (std::size_t k = 0; k < 3; ++k) {
      std::vector<Integer> e(3, 0);
      e[k] = 1;
      auto d = detail::cross(gp, e);
      if (!detail::is_zero_vector(d) && !detail::is_zero_vector(detail::cross(d, p.coords()))) {
        dir = std::move(d);
        break;
      }
    }
    const Integer c2 = detail::dot(f.gradient(dir), p.coords());
    const Integer d3 = f.evaluate(dir);
    if (c2 == 0 && d3 == 0) throw Error(ErrorKind::kLineComponent, "tangent line is a component of the cubic");
    result = detail::combine(d3, p.coords(), -c2, dir);
  }
  ProjectivePoint r(std::move(result));
  if (!c.contains(r)) throw Error(ErrorKind::kInternal, "third intersection left the cubic");
  return r;
}

struct GroupLimits {
  std::size_t max_digits = 10000;
  long max_multiplier = 50;
};

/// A plane cubic together with a rational origin at which it is smooth.
class GroupContext {
 public:
  GroupContext(PlaneCubic curve, ProjectivePoint origin, GroupLimits limits = {})
      : curve_(std::move(curve)), origin_(std::move(origin)), limits_(limits) {
    if (!on_curve(curve_, origin_)) throw Error(ErrorKind::kPrecondition, "origin not on the cubic");
    if (curve_.is_singular_at(origin_)) throw Error(ErrorKind::kSingularPoint, "cubic singular at the origin");
  }

  const PlaneCubic& curve() const { return curve_; }
  const ProjectivePoint& origin() const { return origin_; }
  const GroupLimits& limits() const { return limits_; }

  /// p + q := O * (p * q).
  ProjectivePoint add(const ProjectivePoint& p, const ProjectivePoint& q) const {
    return checked(third_intersection(curve_, origin_, third_intersection(curve_, p, q)));
  }

  /// -p := p * (O * O).
  ProjectivePoint negate(const ProjectivePoint& p) const {
    return checked(third_intersection(curve_, p, third_intersection(curve_, origin_, origin_)));
  }

  ProjectivePoint multiply(long n, const ProjectivePoint& p) const {
    if (n > limits_.max_multiplier || -n > limits_.max_multiplier) {
      throw Error(ErrorKind::kCapExceeded, "multiplier " + std::to_string(n) + " exceeds the cap");
    }
    if (n < 0) return negate(multiply(-n, p));
    ProjectivePoint acc = origin_;
    ProjectivePoint base = p;
    for (unsigned long k = static_cast<unsigned long>(n); k > 0; k >>= 1) {
      if (k & 1) acc = add(acc, base);
      if (k > 1) base = add(base, base);
    }
    return acc;
  }

  /// Order of p if it is at most 12, the largest order of a rational torsion
  /// point on an elliptic curve over Q.
  std::optional<int> torsion_order(const ProjectivePoint& p) const {
    ProjectivePoint q = p;
    for (int n = 1; n <= 12; ++n) {
      if (q == origin_) return n;
      if (n < 12) q = add(q, p);
    }
    return std::nullopt;
  }

  bool is_torsion(const ProjectivePoint& p) const { return torsion_order(p).has_value(); }

 private:
  ProjectivePoint checked(ProjectivePoint p) const {
    if (p.max_digits() > limits_.max_digits) {
      throw Error(ErrorKind::kCapExceeded, "coordinate size exceeds " + std::to_string(limits_.max_digits) + " digits");
    }
    return p;
  }

  PlaneCubic curve_;
  ProjectivePoint origin_;
  GroupLimits limits_;
};

}  // namespace arithsurf

#endif  // ARITHSURF_CUBIC_GROUP_HPP

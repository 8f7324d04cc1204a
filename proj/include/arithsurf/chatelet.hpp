#ifndef ARITHSURF_CHATELET_HPP
#define ARITHSURF_CHATELET_HPP

// Cubic Chatelet surfaces t(x^2+y^2) = (c z - 7t)(z^2 - 2t^2) for c = 4
// (variant A) and c = 2 (variant B). On the affine chart t = 1 with
// xi = x/t, mu = y/t, lambda = z/t the surface reads xi^2 + mu^2 = f(lambda).
// Fixing one of xi, mu gives a plane cubic m^2 = f(lambda) - const whose
// group law (origin at infinity) supplies the doubling maps; the unit circle
// acts on each conic fiber by rotation.

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arithsurf/cubic_group.hpp"
#include "arithsurf/parallel.hpp"

namespace arithsurf::chatelet {

enum class Variant { kA, kB };

/// f(lambda) = (c lambda - 7)(lambda^2 - 2), c = 4 for A and 2 for B.
class ChateletSurface {
 public:
  explicit ChateletSurface(Variant v) : variant_(v), lead_(v == Variant::kA ? 4 : 2) {
    // (c l - 7)(l^2 - 2) = c l^3 - 7 l^2 - 2c l + 14
    coeffs_ = {Rational(14), Rational(-2 * lead_), Rational(-7), Rational(lead_)};
  }

  Variant variant() const { return variant_; }
  /// Coefficients of f, constant term first.
  const std::array<Rational, 4>& coefficients() const { return coeffs_; }

  Rational f(const Rational& l) const { return ((coeffs_[3] * l + coeffs_[2]) * l + coeffs_[1]) * l + coeffs_[0]; }
  Rational f_prime(const Rational& l) const { return (3 * coeffs_[3] * l + 2 * coeffs_[2]) * l + coeffs_[1]; }

  Residue f(const Residue& l) const {
    auto c = [&](int i) { return *reduce(coeffs_[static_cast<std::size_t>(i)], l.modulus()); };
    return ((c(3) * l + c(2)) * l + c(1)) * l + c(0);
  }

  /// The defining cubic form in (t:x:y:z).
  const HomogeneousForm& form() const { return form_cache(); }

 private:
  const HomogeneousForm& form_cache() const {
    static const HomogeneousForm form_a(build(4));
    static const HomogeneousForm form_b(build(2));
    return variant_ == Variant::kA ? form_a : form_b;
  }

  static Polynomial build(long lead) {
    auto v = Polynomial::variables(4);
    const auto &t = v[0], &x = v[1], &y = v[2], &z = v[3];
    return t * (x.pow(2) + y.pow(2)) - (Rational(lead) * z - Rational(7) * t) * (z.pow(2) - Rational(2) * t.pow(2));
  }

  Variant variant_;
  long lead_;
  std::array<Rational, 4> coeffs_;
};

inline const ChateletSurface& surface_a() {
  static const ChateletSurface s(Variant::kA);
  return s;
}

inline const ChateletSurface& surface_b() {
  static const ChateletSurface s(Variant::kB);
  return s;
}

inline bool on_X(const ChateletSurface& s, const ProjectivePoint& p) {
  if (p.size() != 4) throw Error(ErrorKind::kArityMismatch, "surface point needs coordinates (t:x:y:z)");
  return evaluate_form(s.form(), p) == 0;
}

struct AffinePoint {
  Rational xi;
  Rational mu;
  Rational lambda;

  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

inline bool on_surface(const ChateletSurface& s, const AffinePoint& p) {
  return p.xi * p.xi + p.mu * p.mu == s.f(p.lambda);
}

inline AffinePoint make_point(const ChateletSurface& s, Rational xi, Rational mu, Rational lambda) {
  AffinePoint p{std::move(xi), std::move(mu), std::move(lambda)};
  if (!on_surface(s, p)) throw Error(ErrorKind::kPrecondition, "xi^2 + mu^2 != f(lambda)");
  return p;
}

/// (1 : xi : mu : lambda) with integer coordinates.
inline ProjectivePoint to_projective(const AffinePoint& p) {
  return ProjectivePoint::from_rationals({Rational(1), p.xi, p.mu, p.lambda});
}

/// An element (c, s) of the unit circle x^2 + y^2 = 1.
struct Rotation {
  Rational c;
  Rational s;

  Rotation(Rational c_, Rational s_) : c(std::move(c_)), s(std::move(s_)) {
    if (c * c + s * s != 1) throw Error(ErrorKind::kPrecondition, "rotation not on the unit circle");
  }

  static Rotation identity() { return {Rational(1), Rational(0)}; }

  /// Composition as complex multiplication (c1 + i s1)(c2 + i s2).
  friend Rotation operator*(const Rotation& a, const Rotation& b) {
    return {a.c * b.c - a.s * b.s, a.c * b.s + a.s * b.c};
  }
};

/// (xi, mu) -> (xi c - mu s, xi s + mu c); lambda is untouched.
inline AffinePoint rotate(const Rotation& g, const AffinePoint& p) {
  return {p.xi * g.c - p.mu * g.s, p.xi * g.s + p.mu * g.c, p.lambda};
}

enum class FixedCoordinate { kXi, kMu };

/// [2] on the elliptic fiber obtained by fixing one conic coordinate. With m
/// the moving coordinate, m^2 = f(lambda) - const, slope k = f'(l0)/(2m) and
/// f = c3 l^3 + c2 l^2 + ...:
///   l' = (k^2 - c2)/c3 - 2 l0,   m' = -(m + k (l' - l0)).
inline AffinePoint double_on_fiber(const ChateletSurface& s, FixedCoordinate fixed, const AffinePoint& p) {
  const Rational& m = fixed == FixedCoordinate::kXi ? p.mu : p.xi;
  if (m == 0) throw Error(ErrorKind::kTwoTorsionLocus, "moving coordinate is zero");
  const auto& c = s.coefficients();
  Rational k = s.f_prime(p.lambda) / (2 * m);
  Rational l2 = (k * k - c[2]) / c[3] - 2 * p.lambda;
  Rational m2 = -(m + k * (l2 - p.lambda));
  AffinePoint out = fixed == FixedCoordinate::kXi ? AffinePoint{p.xi, m2, l2} : AffinePoint{m2, p.mu, l2};
  if (!on_surface(s, out)) throw Error(ErrorKind::kInternal, "doubling left the surface");
  return out;
}

/// sigma_g = [2] o g, doubling with xi fixed.
inline AffinePoint sigma(const ChateletSurface& s, const Rotation& g, const AffinePoint& p) {
  return double_on_fiber(s, FixedCoordinate::kXi, rotate(g, p));
}

/// The fiber through a fixed coordinate value as a plane cubic in
/// (lambda : m : w): m^2 w = c3 l^3 + c2 l^2 w + c1 l w^2 + (c0 - value^2) w^3,
/// with the group origin at the flex (0:1:0).
inline GroupContext fiber_group(const ChateletSurface& s, const Rational& fixed_value, GroupLimits limits = {}) {
  auto v = Polynomial::variables(3);
  const auto &l = v[0], &m = v[1], &w = v[2];
  const auto& c = s.coefficients();
  Polynomial cubic = m.pow(2) * w - (c[3] * l.pow(3) + c[2] * l.pow(2) * w + c[1] * l * w.pow(2) +
                                     Rational(c[0] - fixed_value * fixed_value) * w.pow(3));
  return GroupContext(PlaneCubic(cubic), ProjectivePoint{0, 1, 0}, limits);
}

inline ProjectivePoint fiber_plane_point(FixedCoordinate fixed, const AffinePoint& p) {
  const Rational& m = fixed == FixedCoordinate::kXi ? p.mu : p.xi;
  return ProjectivePoint::from_rationals({p.lambda, m, Rational(1)});
}

inline AffinePoint from_fiber_plane(FixedCoordinate fixed, const Rational& fixed_value, const ProjectivePoint& q) {
  if (q[2] == 0) throw Error(ErrorKind::kPrecondition, "fiber point at infinity has no affine image");
  Rational l = make_rational(q[0], q[2]);
  Rational m = make_rational(q[1], q[2]);
  return fixed == FixedCoordinate::kXi ? AffinePoint{fixed_value, m, l} : AffinePoint{m, fixed_value, l};
}

/// Second intersection of x^2 + y^2 = N with the line of slope m through the
/// base point: t = -2(x0 + m y0)/(1 + m^2), (x, y) = (x0 + t, y0 + m t).
inline std::pair<Rational, Rational> conic_chord_point(const Rational& n, const std::pair<Rational, Rational>& base,
                                                       const Rational& m) {
  const auto& [x0, y0] = base;
  if (n == 0) throw Error(ErrorKind::kPrecondition, "degenerate conic N = 0");
  if (x0 * x0 + y0 * y0 != n) throw Error(ErrorKind::kPrecondition, "base point not on the conic");
  Rational t = -2 * (x0 + m * y0) / (1 + m * m);
  return {x0 + t, y0 + m * t};
}

/// Multiples 1..count of (lambda, xi) = (2, 1) on the mu = 1 fiber of X_A.
inline std::vector<AffinePoint> generate_seed_points(long count, GroupLimits limits = {}) {
  const auto& s = surface_a();
  if (count > limits.max_multiplier) throw Error(ErrorKind::kCapExceeded, "count exceeds the multiple cap");
  const AffinePoint seed{1, 1, 2};
  auto ctx = fiber_group(s, seed.mu, limits);
  const auto base = fiber_plane_point(FixedCoordinate::kMu, seed);
  std::vector<AffinePoint> out;
  ProjectivePoint current = base;
  for (long n = 1; n <= count; ++n) {
    if (n > 1) current = ctx.add(current, base);
    out.push_back(from_fiber_plane(FixedCoordinate::kMu, seed.mu, current));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Approximation modulo primes on X_A

/// Default lower bound for the primes accepted by the mod-l solver.
inline constexpr std::uint64_t kDefaultL0 = 100;

/// A point of the curve 4 v^2 (4 z0 + 8 r - 7) = f'(r)^2 inside C_2 x C over F_l,
/// with (a, b) on a^2 + b^2 = 2 and (alpha, beta) on the unit circle.
struct GammaSolution {
  Residue a, b, alpha, beta, r, s, v;
};

namespace detail {

inline void check_gamma_inputs(std::uint64_t ell, const Residue& z0, std::uint64_t l0) {
  if (z0.modulus() != ell) throw Error(ErrorKind::kPrecondition, "z0 is not a residue modulo ell");
  if (ell <= l0) throw Error(ErrorKind::kPrecondition, "ell must exceed l0 = " + std::to_string(l0));
  if (ell == 2) throw Error(ErrorKind::kPrecondition, "ell must be odd");
  const Residue four = z0.with_value(4);
  if (four * z0 == z0.with_value(25)) throw Error(ErrorKind::kPrecondition, "excluded value lambda = 25/4");
  if (four * z0 == z0.with_value(-11)) throw Error(ErrorKind::kPrecondition, "excluded value lambda = -11/4");
}

inline std::vector<Residue> both_roots(const Residue& x) {
  auto r = sqrt_mod(x);
  if (!r) return {};
  if (r->is_zero()) return {*r};
  return {*r, -*r};
}

}  // namespace detail

/// Solutions in deterministic scan order: b = 1, 2, ...; for each b the
/// smaller root of v, then of a, then of alpha first. At most `limit` returned.
inline std::vector<GammaSolution> gamma_solutions(std::uint64_t ell, const Residue& z0, std::size_t limit,
                                                  std::uint64_t l0 = kDefaultL0) {
  detail::check_gamma_inputs(ell, z0, l0);
  std::vector<GammaSolution> out;
  const Residue one = z0.with_value(1);
  for (std::uint64_t bv = 1; bv < ell && out.size() < limit; ++bv) {
    const Residue b = z0.with_value(static_cast<long long>(bv));
    const Residue b2 = b * b;
    const Residue r = z0.with_value(9) * (one / b2 - one / z0.with_value(4));
    const Residue s = -(z0.with_value(6) / b) * (r - z0.with_value(2)) - b;
    const Residue denom = z0.with_value(4) * (z0.with_value(4) * z0 + z0.with_value(8) * r - z0.with_value(7));
    if (denom.is_zero()) continue;
    const Residue fp = (z0.with_value(12) * r - z0.with_value(14)) * r - z0.with_value(8);
    const Residue v2 = fp * fp / denom;
    if (v2.is_zero()) continue;
    for (const auto& v : detail::both_roots(v2)) {
      for (const auto& a : detail::both_roots(z0.with_value(2) - b2)) {
        if (a.is_zero()) continue;
        // beta = (v - s alpha)/a on alpha^2 + beta^2 = 1:
        // (a^2 + s^2) alpha^2 - 2 v s alpha + v^2 - a^2 = 0.
        const Residue lead = a * a + s * s;
        std::vector<Residue> alphas;
        if (lead.is_zero()) {
          if (s.is_zero()) continue;
          alphas.push_back((v * v - a * a) / (z0.with_value(2) * v * s));
        } else {
          for (const auto& root : detail::both_roots(a * a * (lead - v * v))) alphas.push_back((v * s + root) / lead);
        }
        for (const auto& alpha : alphas) {
          const Residue beta = (v - s * alpha) / a;
          if (!(alpha * alpha + beta * beta == one)) throw Error(ErrorKind::kInternal, "alpha, beta off the circle");
          out.push_back({a, b, alpha, beta, r, s, v});
          if (out.size() >= limit) return out;
        }
      }
    }
  }
  return out;
}

inline GammaSolution gamma_search_mod_l(std::uint64_t ell, const Residue& z0, std::uint64_t l0 = kDefaultL0) {
  auto sols = gamma_solutions(ell, z0, 1, l0);
  if (sols.empty()) {
    throw Error(ErrorKind::kExhausted, "no point on Gamma over F_" + std::to_string(ell) + "; l0 may be too small");
  }
  return sols.front();
}

/// Target residue point (xi, mu, lambda) of X_A over F_ell.
struct ResidueTarget {
  std::uint64_t ell;
  Residue xi, mu, lambda;
};

inline void validate_target(const ResidueTarget& t, std::uint64_t l0 = kDefaultL0) {
  if (t.xi.modulus() != t.ell || t.mu.modulus() != t.ell || t.lambda.modulus() != t.ell) {
    throw Error(ErrorKind::kPrecondition, "target residues must be modulo ell");
  }
  if (t.ell <= l0) throw Error(ErrorKind::kPrecondition, "ell must exceed l0 = " + std::to_string(l0));
  const Residue fl = surface_a().f(t.lambda);
  if (fl.is_zero()) throw Error(ErrorKind::kPrecondition, "f(lambda) = 0: singular conic fiber");
  if (!(t.xi * t.xi + t.mu * t.mu == fl)) throw Error(ErrorKind::kPrecondition, "target not on X_A mod ell");
  const Residue four = t.lambda.with_value(4);
  if (four * t.lambda == t.lambda.with_value(25) || four * t.lambda == t.lambda.with_value(-11)) {
    throw Error(ErrorKind::kPrecondition, "target lambda is an excluded value (25/4 or -11/4)");
  }
}

struct ConicConstraint {
  std::uint64_t ell;
  Residue x, y;
};

/// A rational point on x^2 + y^2 = N reducing to every constraint. Slopes are
/// found per prime by enumeration and joined by CRT. The one point the chord
/// family through the base misses is handled by rotating the base by
/// (3/5, 4/5) and retrying; if that rotation has no reduction at some prime
/// (or still misses), the next rotations ((k^2-1)/(k^2+1), 2k/(k^2+1)) follow.
inline std::pair<Rational, Rational> lift_conic_with_congruences(const Rational& n,
                                                                 const std::pair<Rational, Rational>& base,
                                                                 std::span<const ConicConstraint> constraints) {
  if (base.first * base.first + base.second * base.second != n) {
    throw Error(ErrorKind::kPrecondition, "base point not on the conic");
  }
  if (constraints.empty()) return base;
  constexpr long kAttempts = 16;
  for (long k = 1; k <= kAttempts; ++k) {
    std::pair<Rational, Rational> current = base;
    if (k > 1) {
      const Rational c = make_rational(k * k - 1, k * k + 1), s = make_rational(2 * k, k * k + 1);
      current = {base.first * c - base.second * s, base.first * s + base.second * c};
    }
    std::vector<Residue> slopes;
    bool reachable = true;
    for (const auto& con : constraints) {
      auto nr = reduce(n, con.ell);
      if (!nr || nr->is_zero()) throw Error(ErrorKind::kBadReduction, "conic degenerates mod " + std::to_string(con.ell));
      if (!(con.x * con.x + con.y * con.y == *nr)) {
        throw Error(ErrorKind::kPrecondition, "target not on the conic mod " + std::to_string(con.ell));
      }
      auto x0 = reduce(current.first, con.ell);
      auto y0 = reduce(current.second, con.ell);
      if (!x0 || !y0) {
        reachable = false;
        break;
      }
      std::optional<Residue> hit;
      for (std::uint64_t mv = 0; mv < con.ell && !hit; ++mv) {
        const Residue m = x0->with_value(static_cast<long long>(mv));
        const Residue denom = x0->with_value(1) + m * m;
        if (denom.is_zero()) continue;
        const Residue t = -(x0->with_value(2) * (*x0 + m * *y0)) / denom;
        if (*x0 + t == con.x && *y0 + m * t == con.y) hit = m;
      }
      if (!hit) {
        reachable = false;
        break;
      }
      slopes.push_back(*hit);
    }
    if (!reachable) continue;
    const Integer m = crt(slopes);
    auto point = conic_chord_point(n, current, Rational(m));
    for (const auto& con : constraints) {
      auto px = reduce(point.first, con.ell);
      auto py = reduce(point.second, con.ell);
      if (!px || !py || !(*px == con.x) || !(*py == con.y)) {
        throw Error(ErrorKind::kInternal, "lifted conic point does not reduce to the target");
      }
    }
    return point;
  }
  throw Error(ErrorKind::kUnreachableTarget, "no chord slope reaches the target, fallback exhausted");
}

struct WwapOptions {
  std::uint64_t l0 = kDefaultL0;
  std::size_t retries_per_prime = 32;
};

/// A rational point of X_A congruent to every target modulo its prime:
/// solve Gamma mod each ell, lift (a,b) to x^2+y^2=2 and (alpha,beta) to the
/// unit circle jointly by CRT, apply sigma_h sigma_g to (1,1,2) (which lands
/// on the target's lambda mod every ell), then rotate within the conic fiber
/// onto the target.
inline ProjectivePoint wwap_solve(std::span<const ResidueTarget> targets, const WwapOptions& opts = {}) {
  if (targets.empty()) throw Error(ErrorKind::kPrecondition, "no targets");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    validate_target(targets[i], opts.l0);
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[j].ell == targets[i].ell) throw Error(ErrorKind::kPrecondition, "targets need distinct primes");
    }
  }
  const auto& surf = surface_a();
  std::vector<std::vector<GammaSolution>> candidates;
  for (const auto& t : targets) {
    candidates.push_back(gamma_solutions(t.ell, t.lambda, opts.retries_per_prime, opts.l0));
    if (candidates.back().empty()) {
      throw Error(ErrorKind::kExhausted, "no point on Gamma over F_" + std::to_string(t.ell));
    }
  }
  std::vector<std::size_t> index(targets.size(), 0);
  const AffinePoint p0{1, 1, 2};

  while (true) {
    std::vector<ConicConstraint> c2, c1;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const auto& g = candidates[i][index[i]];
      c2.push_back({targets[i].ell, g.a, g.b});
      c1.push_back({targets[i].ell, g.alpha, g.beta});
    }
    auto [a, b] = lift_conic_with_congruences(2, {1, 1}, c2);
    auto [alpha, beta] = lift_conic_with_congruences(1, {1, 0}, c1);
    // g(p0) = (a, b) for g = ((a+b)/2, (b-a)/2).
    const Rotation g((a + b) / 2, (b - a) / 2);
    const Rotation h(alpha, beta);
    const AffinePoint w = sigma(surf, h, sigma(surf, g, p0));

    bool all_good = true;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const auto& t = targets[i];
      auto xw = reduce(w.xi, t.ell);
      auto yw = reduce(w.mu, t.ell);
      auto lw = reduce(w.lambda, t.ell);
      bool good = xw && yw && lw && *lw == t.lambda && !(*xw * *xw + *yw * *yw).is_zero();
      if (!good) {
        all_good = false;
        if (++index[i] >= candidates[i].size()) {
          throw Error(ErrorKind::kBadReduction, "retry budget exhausted at ell = " + std::to_string(t.ell));
        }
      }
    }
    if (!all_good) continue;

    // Rotation taking w onto the target in each conic fiber mod ell:
    // (c + i s) = (xi_t + i mu_t)(xi_w - i mu_w) / N.
    std::vector<ConicConstraint> rot;
    for (const auto& t : targets) {
      const Residue xw = *reduce(w.xi, t.ell);
      const Residue yw = *reduce(w.mu, t.ell);
      const Residue norm = xw * xw + yw * yw;
      rot.push_back({t.ell, (xw * t.xi + yw * t.mu) / norm, (xw * t.mu - yw * t.xi) / norm});
    }
    auto [c, s] = lift_conic_with_congruences(1, {1, 0}, rot);
    const AffinePoint x = rotate(Rotation(c, s), w);
    if (!on_surface(surf, x)) throw Error(ErrorKind::kInternal, "wwap point left the surface");
    for (const auto& t : targets) {
      auto rx = reduce(x.xi, t.ell);
      auto ry = reduce(x.mu, t.ell);
      auto rl = reduce(x.lambda, t.ell);
      if (!rx || !ry || !rl || !(*rx == t.xi) || !(*ry == t.mu) || !(*rl == t.lambda)) {
        throw Error(ErrorKind::kInternal, "wwap point does not reduce to the target mod " + std::to_string(t.ell));
      }
    }
    return to_projective(x);
  }
}

// ---------------------------------------------------------------------------
// Height-bounded searches

namespace detail {

inline std::optional<long long> isqrt_exact(long long n) {
  if (n < 0) return std::nullopt;
  auto r = static_cast<long long>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

/// All (x, y) with x^2 + y^2 = k, both signs, optionally bounded.
inline std::vector<std::pair<long long, long long>> two_squares(long long k, long long bound) {
  std::vector<std::pair<long long, long long>> out;
  for (long long x = 0; x * x <= k && x <= bound; ++x) {
    auto y = isqrt_exact(k - x * x);
    if (!y || *y > bound) continue;
    for (long long sx : {1LL, -1LL}) {
      if (x == 0 && sx < 0) continue;
      for (long long sy : {1LL, -1LL}) {
        if (*y == 0 && sy < 0) continue;
        out.emplace_back(sx * x, sy * *y);
      }
    }
  }
  return out;
}

inline long long mod4(long long v) { return ((v % 4) + 4) % 4; }

inline std::vector<ProjectivePoint> merge(std::vector<std::vector<ProjectivePoint>>& parts) {
  std::vector<ProjectivePoint> all;
  for (auto& v : parts) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace detail

/// Coprime points (t:x:y:z) of X_A with 0 < t <= H, |z| <= H. With the
/// component filter only the real component z^2 <= 2 t^2 is searched; x, y
/// are recovered from x^2 + y^2 = (4z - 7t)(z^2 - 2t^2)/t.
inline std::vector<ProjectivePoint> wap_failure_search(long height, bool component_filter = true,
                                                       unsigned workers = 1) {
  if (height < 1) throw Error(ErrorKind::kPrecondition, "height must be positive");
  std::vector<std::vector<ProjectivePoint>> parts(static_cast<std::size_t>(height));
  parallel_for(1, height + 1, workers, [&](long t) {
    auto& out = parts[static_cast<std::size_t>(t - 1)];
    for (long long z = -height; z <= height; ++z) {
      if (component_filter && z * z > 2LL * t * t) continue;
      const long long m = (4 * z - 7LL * t) * (z * z - 2LL * t * t);
      if (m % t != 0) continue;
      const long long k = m / t;
      if (k < 0) continue;
      for (auto [x, y] : detail::two_squares(k, k)) {
        if (std::gcd(std::gcd(static_cast<long long>(t), x), std::gcd(y, z)) != 1) continue;
        ProjectivePoint p{t, static_cast<long>(x), static_cast<long>(y), static_cast<long>(z)};
        if (!on_X(surface_a(), p)) throw Error(ErrorKind::kInternal, "search produced an off-surface point");
        out.push_back(std::move(p));
      }
    }
  });
  return detail::merge(parts);
}

struct TwoAdicFilters {
  bool component = true;    // d^2 > 2 a^2
  bool congruences = true;  // a = d = 1 mod 4, b even, c odd
};

/// Coprime points (a:b:c:d) of X_B with 0 < a <= H and |b|, |c|, |d| <= H.
inline std::vector<ProjectivePoint> two_adic_search(long height, TwoAdicFilters filters = {}, unsigned workers = 1) {
  if (height < 1) throw Error(ErrorKind::kPrecondition, "height must be positive");
  std::vector<std::vector<ProjectivePoint>> parts(static_cast<std::size_t>(height));
  parallel_for(1, height + 1, workers, [&](long a) {
    auto& out = parts[static_cast<std::size_t>(a - 1)];
    if (filters.congruences && detail::mod4(a) != 1) return;
    for (long long d = -height; d <= height; ++d) {
      if (filters.component && d * d <= 2LL * a * a) continue;
      if (filters.congruences && detail::mod4(d) != 1) continue;
      const long long m = (2 * d - 7LL * a) * (d * d - 2LL * a * a);
      if (m % a != 0) continue;
      const long long k = m / a;
      if (k < 0) continue;
      for (auto [b, c] : detail::two_squares(k, height)) {
        if (filters.congruences && (detail::mod4(b) % 2 != 0 || detail::mod4(c) % 2 != 1)) continue;
        if (std::gcd(std::gcd(static_cast<long long>(a), b), std::gcd(c, d)) != 1) continue;
        ProjectivePoint p{a, static_cast<long>(b), static_cast<long>(c), static_cast<long>(d)};
        if (!on_X(surface_b(), p)) throw Error(ErrorKind::kInternal, "search produced an off-surface point");
        out.push_back(std::move(p));
      }
    }
  });
  return detail::merge(parts);
}

}  // namespace arithsurf::chatelet

#endif  // ARITHSURF_CHATELET_HPP

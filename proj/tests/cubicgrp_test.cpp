#include <gtest/gtest.h>

#include "support.hpp"

using namespace arithsurf;

namespace {

PlaneCubic fermat_cubic() {
  auto v = Polynomial::variables(3);
  return PlaneCubic(v[0].pow(3) + v[1].pow(3) + v[2].pow(3));
}

GroupContext fermat_cubic_ctx() { return GroupContext(fermat_cubic(), ProjectivePoint{1, -1, 0}); }

// The two sampled families: lambda-fibers of the quartic and conic-coordinate
// fibers of X_A. Each yields a context and a non-torsion generator.
struct Sample {
  GroupContext ctx;
  ProjectivePoint gen;
};

std::vector<Sample> sample_fibers() {
  std::vector<Sample> out;
  for (const Rational& l : {Rational(2), Rational(3), make_rational(1, 2), make_rational(-3, 2), make_rational(5, 3)}) {
    auto f = fermat::lambda_fiber(l);
    out.push_back({f.ctx, f.section});
  }
  const auto& s = chatelet::surface_a();
  out.push_back({chatelet::fiber_group(s, 1), ProjectivePoint{2, 1, 1}});
  out.push_back({chatelet::fiber_group(s, 1), ProjectivePoint{2, -1, 1}});
  return out;
}

}  // namespace

TEST(CubicGroup, OnCurveExamples) {
  auto c = fermat_cubic();
  EXPECT_TRUE(on_curve(c, {1, -1, 0}));
  EXPECT_FALSE(on_curve(c, {1, 1, 1}));
  EXPECT_TRUE(on_curve(fermat::lambda_fiber(2).ctx.curve(), {3, -1, 1}));
}

TEST(CubicGroup, ThirdIntersectionExamples) {
  auto c = fermat_cubic();
  EXPECT_EQ(third_intersection(c, {1, -1, 0}, {0, 1, -1}), ProjectivePoint({1, 0, -1}));
  EXPECT_EQ(third_intersection(c, {1, -1, 0}, {1, -1, 0}), ProjectivePoint({1, -1, 0}));
  EXPECT_EQ(third_intersection(c, {0, 1, -1}, {1, 0, -1}), ProjectivePoint({1, -1, 0}));
  EXPECT_THROW(third_intersection(c, {1, 1, 1}, {1, -1, 0}), Error);
}

TEST(CubicGroup, ThirdIntersectionIsCollinear) {
  for (const auto& s : sample_fibers()) {
    auto p = s.ctx.multiply(2, s.gen), q = s.ctx.multiply(3, s.gen);
    auto r = third_intersection(s.ctx.curve(), p, q);
    // det[p; q; r] = 0
    const auto &a = p.coords(), &b = q.coords(), &c = r.coords();
    Integer det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
    EXPECT_EQ(det, 0);
  }
}

TEST(CubicGroup, AddExamples) {
  auto ctx = fermat_cubic_ctx();
  EXPECT_EQ(ctx.add({0, 1, -1}, ctx.origin()), ProjectivePoint({0, 1, -1}));
  EXPECT_EQ(ctx.add({0, 1, -1}, {1, 0, -1}), ctx.origin());
  // (lambda, xi) = (2, 1) on the mu = 1 fiber of X_A doubles to lambda = 27/4.
  auto fib = chatelet::fiber_group(chatelet::surface_a(), 1);
  auto d = fib.add({2, 1, 1}, {2, 1, 1});
  EXPECT_EQ(make_rational(d[0], d[2]), make_rational(27, 4));
}

TEST(CubicGroup, NegateExamples) {
  auto ctx = fermat_cubic_ctx();
  EXPECT_EQ(ctx.negate(ctx.origin()), ctx.origin());
  EXPECT_EQ(ctx.negate({0, 1, -1}), ProjectivePoint({1, 0, -1}));
}

TEST(CubicGroup, MultiplyExamples) {
  auto ctx = fermat_cubic_ctx();
  EXPECT_EQ(ctx.multiply(3, {0, 1, -1}), ctx.origin());
  EXPECT_EQ(ctx.multiply(1, {0, 1, -1}), ProjectivePoint({0, 1, -1}));
  EXPECT_EQ(ctx.multiply(0, {0, 1, -1}), ctx.origin());
  EXPECT_THROW(ctx.multiply(51, {0, 1, -1}), Error);
}

TEST(CubicGroup, TorsionExamples) {
  auto ctx = fermat_cubic_ctx();
  EXPECT_TRUE(ctx.is_torsion(ctx.origin()));
  EXPECT_EQ(ctx.torsion_order({0, 1, -1}), 3);
  auto fib = chatelet::fiber_group(chatelet::surface_a(), 1);
  EXPECT_FALSE(fib.is_torsion({2, 1, 1}));
}

TEST(CubicGroup, DigitCapFailsCleanly) {
  GroupLimits tight;
  tight.max_digits = 20;
  auto f = fermat::lambda_fiber(2, tight);
  try {
    f.ctx.multiply(12, f.section);
    FAIL() << "expected cap";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
  }
}

TEST(CubicGroupProperties, GroupAxiomsOnSampledFibers) {
  for (const auto& s : sample_fibers()) {
    const auto& ctx = s.ctx;
    std::vector<ProjectivePoint> pts;
    for (long n : {1, 2, 3, -1, -2}) pts.push_back(ctx.multiply(n, s.gen));
    for (const auto& p : pts) {
      ASSERT_TRUE(on_curve(ctx.curve(), p));
      EXPECT_EQ(ctx.add(p, ctx.origin()), p);
      EXPECT_EQ(ctx.negate(ctx.negate(p)), p);
      EXPECT_EQ(ctx.add(p, ctx.negate(p)), ctx.origin());
      for (const auto& q : pts) {
        auto pq = ctx.add(p, q);
        EXPECT_TRUE(on_curve(ctx.curve(), pq));
        EXPECT_EQ(pq, ctx.add(q, p));
      }
    }
    for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
      const auto &p = pts[i], &q = pts[i + 1], &r = pts[i + 2];
      EXPECT_EQ(ctx.add(ctx.add(p, q), r), ctx.add(p, ctx.add(q, r)));
    }
  }
}

TEST(CubicGroupProperties, MultiplyMatchesIteratedAdd) {
  for (const auto& s : sample_fibers()) {
    ProjectivePoint acc = s.ctx.origin();
    for (long n = 0; n <= 8; ++n) {
      EXPECT_EQ(s.ctx.multiply(n, s.gen), acc) << n;
      acc = s.ctx.add(acc, s.gen);
    }
  }
}

TEST(CubicGroupProperties, FermatCubicTorsionGroup) {
  // Rational points of x^3+y^3+z^3 = 0 form Z/3: every sum stays in the set.
  auto ctx = fermat_cubic_ctx();
  std::vector<ProjectivePoint> pts{{1, -1, 0}, {0, 1, -1}, {1, 0, -1}};
  for (const auto& p : pts) {
    for (const auto& q : pts) {
      auto r = ctx.add(p, q);
      EXPECT_NE(std::find(pts.begin(), pts.end(), r), pts.end());
    }
  }
}

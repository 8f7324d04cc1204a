#include <gtest/gtest.h>

#include "support.hpp"

using namespace arithsurf;
using namespace arithsurf::enriques;

namespace {

// Parity of v_p(a0 a1) at every prime by trial factorization.
bool parity_by_factoring(const ProjectivePoint& p) {
  for (const auto& [q, e] : testsupport::factor(Integer(p[0] * p[1]))) {
    if (e % 2) return false;
  }
  return true;
}

std::vector<ProjectivePoint> fermat_sample() {
  std::vector<ProjectivePoint> out;
  for (const Rational& l : {Rational(2), Rational(3), make_rational(1, 2), make_rational(-3, 2), Rational(-2)}) {
    for (const auto& p : fermat::generate_lambda_points(l, 4)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(Enriques, MembershipExamples) {
  EXPECT_TRUE(on_E({1, 0, 0, 0}));
  EXPECT_TRUE(on_E({0, 1, 0, 0}));
  EXPECT_TRUE(on_E({1, 16, -4, -4}));
  EXPECT_EQ(testsupport::enriques_value({1, 16, -4, -4}), 0);
  EXPECT_FALSE(on_E({1, 1, 1, 2}));
}

TEST(Enriques, PushExamples) {
  EXPECT_EQ(push_from_F({1, -2, -1, 2}), ProjectivePoint({1, 16, -4, -4}));
  // x^4 : y^4 : x y^2 z : x^2 y w at (3,-1,1,3) is (81 : 1 : 3 : -27).
  auto q = push_from_F({3, -1, 1, 3});
  EXPECT_EQ(q, ProjectivePoint({81, 1, 3, -27}));
  EXPECT_EQ(testsupport::enriques_value(q), 0);
  EXPECT_FALSE(on_E({81, 1, 9, -27}));
  EXPECT_EQ(push_from_F({1, 1, 1, 1}), ProjectivePoint({1, 1, 1, 1}));
  EXPECT_THROW(push_from_F({1, 2, 3, 4}), Error);
}

TEST(Enriques, LiftExamples) {
  auto r = lift_check({1, 16, -4, -4});
  EXPECT_EQ(r.cover, Cover::kPlus);
  EXPECT_EQ(r.witness, Integer(4));
  EXPECT_EQ(lift_check({1, 0, 0, 0}).cover, Cover::kDegenerate);
  EXPECT_EQ(lift_check({0, 1, 0, 0}).cover, Cover::kDegenerate);
  EXPECT_THROW(lift_check({1, 1, 1, 2}), Error);
}

TEST(Enriques, ParityExamples) {
  EXPECT_TRUE(valuation_parity_check({1, 16, -4, -4}));
  try {
    valuation_parity_check({1, 0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerate);
  }
}

TEST(EnriquesProperties, PushforwardsLiftWithWitness) {
  for (const auto& p : fermat_sample()) {
    auto q = push_from_F(p);
    ASSERT_EQ(testsupport::enriques_value(q), 0);
    auto r = lift_check(q);
    ASSERT_NE(r.cover, Cover::kDegenerate);
    Integer n = q[0] * q[1];
    EXPECT_EQ(*r.witness * *r.witness, r.cover == Cover::kPlus ? n : Integer(-n));
    EXPECT_TRUE(valuation_parity_check(q));
  }
}

TEST(EnriquesProperties, ScanPointsAreOnEAndLift) {
  auto report = scan(8);
  EXPECT_TRUE(report.violations.empty());
  EXPECT_EQ(report.plus + report.minus + report.degenerate, report.points.size());
  for (const auto& p : report.points) {
    ASSERT_EQ(testsupport::enriques_value(p), 0) << p.to_string();
    auto r = lift_check(p);
    if (r.cover == Cover::kDegenerate) continue;
    Integer n = p[0] * p[1];
    EXPECT_EQ(*r.witness * *r.witness, r.cover == Cover::kPlus ? n : Integer(-n));
    EXPECT_TRUE(valuation_parity_check(p));
    EXPECT_EQ(valuation_parity_check(p), parity_by_factoring(p));
  }
}

TEST(EnriquesProperties, ScanIsCompleteAtSmallHeight) {
  // Brute force over the full box, independent of the solve-for-a3 loop.
  const long h = 4;
  std::set<ProjectivePoint> brute;
  for (long a0 = -h; a0 <= h; ++a0)
    for (long a1 = -h; a1 <= h; ++a1)
      for (long a2 = -h; a2 <= h; ++a2)
        for (long a3 = -h; a3 <= h; ++a3) {
          if (!a0 && !a1 && !a2 && !a3) continue;
          ProjectivePoint p{a0, a1, a2, a3};
          if (testsupport::enriques_value(p) == 0) brute.insert(p);
        }
  auto found = points_up_to_height(h);
  EXPECT_EQ(std::set<ProjectivePoint>(found.begin(), found.end()), brute);
  EXPECT_EQ(points_up_to_height(h, 4), found);
}

TEST(CoprimeBase, PairwiseCoprimeAndDividesInputs) {
  for (long a0 = 1; a0 <= 40; ++a0) {
    for (long a1 : {1L, 2L, 8L, 18L, 50L, 72L, 98L, 200L}) {
      std::vector<Integer> v{Integer(a0), Integer(a1)};
      auto base = coprime_base(v);
      for (const auto& b : base) {
        EXPECT_TRUE(Integer(a0) % b == 0 || Integer(a1) % b == 0);
        for (const auto& c : base) {
          if (&b != &c) {
            EXPECT_EQ(arithsurf::gcd(b, c), 1);
          }
        }
      }
    }
  }
}

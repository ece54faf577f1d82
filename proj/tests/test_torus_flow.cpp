#include "swivel/torus_flow.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace swivel;

TEST(TorusState, ReducesAnglesToFundamentalDomain) {
  TorusState s({-0.5, 7.0, two_pi});
  EXPECT_NEAR(s[0], two_pi - 0.5, 1e-15);
  EXPECT_NEAR(s[1], 7.0 - two_pi, 1e-15);
  EXPECT_DOUBLE_EQ(s[2], 0.0);
  EXPECT_THROW(TorusState(std::vector<double>{}), std::invalid_argument);
}

TEST(Advance, ClosedFormComponents) {
  TorusState s({0.0, 0.0});
  FlowSpec f{{1.0, 2.0}};
  TorusState out = advance(s, f, pi);
  EXPECT_NEAR(out[0], pi, 1e-12);
  EXPECT_NEAR(out[1], 0.0, 1e-12);  // 2*pi wraps to 0
}

TEST(Advance, TimeZeroIsIdentity) {
  TorusState s({0.5, 1.5, 2.5});
  FlowSpec f{{3.0, -4.0, 0.25}};
  TorusState out = advance(s, f, 0.0);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_DOUBLE_EQ(out[j], s[j]);
}

TEST(Advance, CompositionMatchesSingleStep) {
  // advance by 10 == ten advances by 1, up to rounding
  TorusState s({0.0, 0.0, 0.0});
  FlowSpec f{{1.0, std::sqrt(2.0), std::sqrt(3.0)}};
  TorusState direct = advance(s, f, 10.0);
  TorusState step = s;
  for (int i = 0; i < 10; ++i) step = advance(step, f, 1.0);
  for (std::size_t j = 0; j < 3; ++j)
    EXPECT_NEAR(wrap_pi(direct[j] - step[j]), 0.0, 1e-12) << "component " << j;
}

TEST(Advance, FlowPropertyRandomized) {
  std::mt19937 gen(20240915);
  std::uniform_real_distribution<double> ang(0.0, two_pi), w(-3.0, 3.0), tm(-20.0, 20.0);
  for (int rep = 0; rep < 100; ++rep) {
    TorusState s({ang(gen), ang(gen), ang(gen), ang(gen)});
    FlowSpec f{{w(gen), w(gen), w(gen), w(gen)}};
    const double t1 = tm(gen), t2 = tm(gen);
    TorusState lhs = advance(advance(s, f, t1), f, t2);
    TorusState rhs = advance(s, f, t1 + t2);
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(wrap_pi(lhs[j] - rhs[j]), 0.0, 1e-12);
  }
}

TEST(Advance, DimensionMismatchThrows) {
  EXPECT_THROW(advance(TorusState({0.0, 0.0}), FlowSpec{{1.0}}, 1.0), std::invalid_argument);
  EXPECT_THROW(advance(TorusState({0.0}), FlowSpec{{1.0}}, std::nan("")),
               std::invalid_argument);
}

TEST(SignedSum, DetectsDegenerateTriple) {
  auto r = signed_sum_nondegenerate({1.0, 2.0, 3.0}, 1e-12);
  ASSERT_FALSE(r.nondegenerate);
  EXPECT_EQ(r.witness, (std::vector<int>{+1, +1, -1}));
  EXPECT_NEAR(r.value, 0.0, 1e-12);
}

TEST(SignedSum, PassesProperTriangle) {
  EXPECT_TRUE(signed_sum_nondegenerate({3.0, 4.0, 5.0}, 1e-12).nondegenerate);
}

TEST(SignedSum, AlternatingQuadruple) {
  auto r = signed_sum_nondegenerate({1.0, 1.0, 1.0, 1.0}, 1e-12);
  ASSERT_FALSE(r.nondegenerate);
  // some vanishing combination with two plus and two minus signs
  int plus = 0;
  double sum = 0.0;
  for (int e : r.witness) {
    plus += e > 0;
    sum += e;
  }
  EXPECT_EQ(plus, 2);
  EXPECT_EQ(sum, 0.0);
}

TEST(SignedSum, RejectsBadArguments) {
  EXPECT_THROW(signed_sum_nondegenerate({1.0, -2.0}, 1e-9), std::invalid_argument);
  EXPECT_THROW(signed_sum_nondegenerate({1.0, 2.0}, 0.0), std::invalid_argument);
}

TEST(SignedSum, ScaleAndPermutationInvariant) {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> len(0.1, 5.0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> l{len(gen), len(gen), len(gen), len(gen)};
    const double tol = 1e-9;
    const bool base = signed_sum_nondegenerate(l, tol).nondegenerate;

    std::vector<double> scaled = l;
    for (double& x : scaled) x *= 137.0;
    EXPECT_EQ(signed_sum_nondegenerate(scaled, tol * 137.0).nondegenerate, base);

    std::shuffle(l.begin(), l.end(), gen);
    EXPECT_EQ(signed_sum_nondegenerate(l, tol).nondegenerate, base);
  }
}

// For N=3 nondegeneracy holds exactly when either all three strict triangle
// inequalities hold or one side strictly dominates the sum of the others.
TEST(SignedSum, ThreeJointComponents) {
  auto triangle_ok = [](double a, double b, double c) {
    return a < b + c && b < c + a && c < a + b;
  };
  auto dominant = [](double a, double b, double c) {
    return a > b + c || b > c + a || c > a + b;
  };
  std::mt19937 gen(99);
  std::uniform_real_distribution<double> len(0.05, 4.0);
  for (int rep = 0; rep < 500; ++rep) {
    const double a = len(gen), b = len(gen), c = len(gen);
    // stay away from the measure-zero boundary where the tolerance bites
    if (std::abs(a - b - c) < 1e-6 || std::abs(b - c - a) < 1e-6 || std::abs(c - a - b) < 1e-6)
      continue;
    const bool nd = signed_sum_nondegenerate({a, b, c}, 1e-9).nondegenerate;
    EXPECT_EQ(nd, triangle_ok(a, b, c) || dominant(a, b, c));
  }
  EXPECT_TRUE(signed_sum_nondegenerate({10.0, 1.0, 2.0}, 1e-9).nondegenerate);   // dominant
  EXPECT_TRUE(signed_sum_nondegenerate({2.0, 2.5, 3.0}, 1e-9).nondegenerate);    // triangle
  EXPECT_FALSE(signed_sum_nondegenerate({3.0, 1.0, 2.0}, 1e-9).nondegenerate);   // flat
}

TEST(RationalIndependence, FindsIntegerRelation) {
  auto r = check_rational_independence({1.0, 2.0}, 5, 1e-12);
  ASSERT_TRUE(r.relation_found);
  EXPECT_EQ(r.coefficients, (std::vector<long>{2, -1}));
}

TEST(RationalIndependence, SurdTripleLooksIndependent) {
  auto r = check_rational_independence({1.0, std::sqrt(2.0), std::sqrt(3.0)}, 50, 1e-9);
  EXPECT_FALSE(r.relation_found);
}

TEST(RationalIndependence, ToleranceCatchesNearRelation) {
  auto r = check_rational_independence({1.0, 1.0 + 1e-12}, 2, 1e-9);
  ASSERT_TRUE(r.relation_found);
  EXPECT_EQ(r.coefficients, (std::vector<long>{1, -1}));
}

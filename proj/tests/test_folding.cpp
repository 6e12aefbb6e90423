#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symb/folding.hpp"
#include "symb/rational.hpp"

using namespace symb;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

const std::vector<double> kGrid = {2.1, 2.5, 3, 4, 6, 10};

}  // namespace

TEST(FoldFeasible, Examples) {
  const FoldOutcome one = fold_feasible(4, 2);
  EXPECT_TRUE(one.feasible);
  EXPECT_DOUBLE_EQ(one.capacity, 3.0);
  EXPECT_EQ(one.folds, 1);
  EXPECT_FALSE(fold_feasible(4, 0.81).feasible);
  EXPECT_EQ(fold_feasible(4, 0.81).capacity, 4.0);
  EXPECT_EQ(kind_of([] { fold_feasible(4, 0.79); }), ErrorKind::OutOfInterval);
  EXPECT_EQ(kind_of([] { fold_feasible(4, 2.01); }), ErrorKind::OutOfInterval);
  EXPECT_EQ(kind_of([] { fold_feasible(2, 1); }), ErrorKind::OutOfDomain);
}

TEST(FoldFeasible, InitialStateKeepsLevelsConsistent) {
  const FoldState s = initial_fold_state(4, 1.5);
  EXPECT_EQ(s.j, 2);
  EXPECT_DOUBLE_EQ(s.l, s.r / 4);
  EXPECT_DOUBLE_EQ(s.l_prev, 1 - 1.5 / 4);
  EXPECT_NEAR(s.l, 1 - (1.5 + s.u) / 4, 1e-15);
}

TEST(FoldFeasible, FeasibilityIsMonotoneInFoldPoint) {
  for (double a : {2.05, 2.5, 3.0, 4.0, 5.5, 8.0, 20.0, 60.0}) {
    const double lo = a / (a + 1), hi = a / 2;
    bool seen = false;
    for (int i = 0; i <= 2000; ++i) {
      const double u1 = lo + (hi - lo) * i / 2000.0;
      const FoldOutcome o = fold_feasible(a, u1);
      if (seen) {
        ASSERT_TRUE(o.feasible) << "a=" << a << " u1=" << u1;
      }
      seen = seen || o.feasible;
      if (o.feasible) {
        ASSERT_DOUBLE_EQ(o.capacity, 2 + (1 - 2 / a) * u1);
      }
    }
    EXPECT_TRUE(seen);
  }
}

TEST(BallFolding, FourFoldIntoTwoPointSix) {
  const Bound b = ellipsoid_ball_fold_bound(4, Accuracy(1e-6));
  EXPECT_NEAR(b.value(), 2.6916, 5e-4);
  EXPECT_EQ(b.method(), Method::MultiFold);
  const auto cert = std::get<FoldCertificate>(b.certificate());
  EXPECT_TRUE(fold_feasible(4, cert.u1).feasible);
  EXPECT_DOUBLE_EQ(b.value(), 2 + 0.5 * cert.u1);
}

TEST(BallFolding, InclusionBelowTwo) {
  const Bound b = ellipsoid_ball_fold_bound(1.5, Accuracy(1e-6));
  EXPECT_EQ(b.value(), 1.5);
  EXPECT_EQ(b.method(), Method::Inclusion);
  EXPECT_EQ(ellipsoid_ball_fold_bound(2).value(), 2.0);
  EXPECT_EQ(kind_of([] { ellipsoid_ball_fold_bound(0.5); }), ErrorKind::OutOfDomain);
}

TEST(BallFolding, BetweenCapacityBoundAndThreeFolds) {
  const double v = ellipsoid_ball_fold_bound(3, Accuracy(1e-6)).value();
  EXPECT_GE(v, 2.0);
  EXPECT_LE(v, closed_form_A_N(3, 3) + 1e-6);
}

TEST(BallFolding, NeverWorseThanFixedFoldCounts) {
  const Accuracy acc(1e-9);
  for (double a : kGrid)
    for (int n = 1; n <= 3; ++n) EXPECT_LE(ellipsoid_ball_fold_bound(a, acc).value(), closed_form_A_N(a, n) + acc.acc);
}

TEST(BallFolding, RefiningAccuracyNeverRaisesTheBound) {
  for (double a : {2.2, 3.0, 4.0, 7.5, 30.0}) {
    double prev = ellipsoid_ball_fold_bound(a, Accuracy(1e-2)).value();
    for (double acc : {1e-3, 1e-5, 1e-7, 1e-9, 1e-11}) {
      const double v = ellipsoid_ball_fold_bound(a, Accuracy(acc)).value();
      EXPECT_LE(v, prev) << "a=" << a << " acc=" << acc;
      prev = v;
    }
  }
}

TEST(BallFolding, MidpointWithinHalfAccuracyOfReturnedPoint) {
  const FoldPointBracket b = ball_fold_point(4, Accuracy(1e-6));
  EXPECT_LE(b.upper - b.midpoint(), 0.5e-6);
  EXPECT_LE(b.lower, b.upper);
}

TEST(BallFolding, SlopeAtTwo) {
  const double eps = 1e-3;
  const double slope = (ellipsoid_ball_fold_bound(2 + eps).value() - 2) / eps;
  EXPECT_GE(slope, 0.38);
  EXPECT_LE(slope, 0.48);
}

TEST(BallFolding, GuardTurnsRunawayLoopsIntoErrors) {
  EXPECT_EQ(kind_of([] { ellipsoid_ball_fold_bound(4, Accuracy(1e-9, 1)); }), ErrorKind::NonTermination);
}

TEST(ClosedForms, Values) {
  EXPECT_DOUBLE_EQ(closed_form_A_N(4, 1), 3.0);
  EXPECT_DOUBLE_EQ(closed_form_A_N(4, 2), 2 + 10.0 / 13);
  EXPECT_EQ(kind_of([] { closed_form_A_N(2, 1); }), ErrorKind::OutOfDomain);
  EXPECT_EQ(kind_of([] { closed_form_A_N(4, 4); }), ErrorKind::InvalidArgument);
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(ball_fold_closed_form(Rational(2), n), Rational(2));
}

TEST(ClosedForms, ExactSlopeAtTwo) {
  using D = oracle::Dual<Rational>;
  const D at_two = D::variable(Rational(2));
  EXPECT_EQ(ball_fold_closed_form(at_two, 1).d, Rational(1, 2));
  EXPECT_EQ(ball_fold_closed_form(at_two, 2).d, Rational(3, 7));
  EXPECT_EQ(ball_fold_closed_form(at_two, 3).d, Rational(3, 7));
}

TEST(FoldHeight, Examples) {
  // one fold at u1 = a/2: h = 2 l_1 + l_2 with l_1 = 1/2, l_2 = 0
  EXPECT_DOUBLE_EQ(fold_height(2, 1), 1.0);
  const FoldPointBracket b = cube_fold_point(2, Accuracy(1e-12));
  EXPECT_NEAR(fold_height(2, b.upper), fold_width(2, b.upper), 1e-9);
  EXPECT_NEAR(fold_height(1.0001, 1.0001 / 2), 1.0, 1e-3);
  EXPECT_EQ(kind_of([] { fold_height(4, 0.8); }), ErrorKind::OutOfInterval);
}

TEST(CubeFolding, Examples) {
  const Accuracy acc(1e-9);
  EXPECT_NEAR(ellipsoid_cube_fold_bound(2, acc).value(), 10.0 / 7, 1e-8);
  EXPECT_NEAR(ellipsoid_cube_fold_bound(4, acc).value(), 44.0 / 23, 1e-8);
  EXPECT_EQ(ellipsoid_cube_fold_bound(1).value(), 1.0);
  EXPECT_EQ(ellipsoid_cube_fold_bound(1).method(), Method::Inclusion);
}

TEST(CubeFolding, MatchesClosedFormOnItsRange) {
  const Accuracy acc(1e-9);
  for (double a = 1.05; a < 4.236; a += 0.05) {
    EXPECT_NEAR(ellipsoid_cube_fold_bound(a, acc).value(), cube_fold_closed_form(a), 10 * acc.acc) << a;
    EXPECT_NEAR(cube_fold_point(a, acc).upper, cube_fold_point_closed_form(a), 10 * acc.acc) << a;
  }
  EXPECT_EQ(cube_fold_closed_form(Rational(2)), Rational(10, 7));
  EXPECT_EQ(cube_fold_closed_form(Rational(4)), Rational(44, 23));
}

TEST(CubeFolding, NeverWorseThanOneFold) {
  for (double a = 1.5; a < 40; a += 0.5) EXPECT_LE(ellipsoid_cube_fold_bound(a).value(), (a + 1) / 2);
}

TEST(PolydiscBall, Examples) {
  EXPECT_EQ(polydisc_ball_fold_bound(10).value(), 6.0);
  EXPECT_EQ(polydisc_ball_fold_bound(3).value(), 3.5);
  EXPECT_EQ(polydisc_ball_fold_bound(6).value(), 5.0);
  EXPECT_EQ(polydisc_ball_fold_bound(2).value(), 3.0);
  EXPECT_EQ(polydisc_ball_fold_bound(2).method(), Method::Inclusion);
  EXPECT_EQ(std::get<IndexCertificate>(polydisc_ball_fold_bound(10).certificate()).k, 2);
}

TEST(PolydiscBall, BranchesAgreeAtBreakpoints) {
  for (long long k = 1; k <= 50; ++k) {
    const Rational a(2 * (k * k + k + 1));
    const Rational left = (a - 2) / Rational(2 * k) + (k + 2);
    const Rational right = (a - 2) / Rational(2 * (k + 1)) + (k + 3);
    ASSERT_EQ(left, right) << k;
    ASSERT_EQ(polydisc_ball_fold_bound(a.convert_to<double>()).value(), left.convert_to<double>());
  }
}

TEST(PolydiscCube, Examples) {
  EXPECT_EQ(polydisc_cube_fold_bound(5).value(), 3.0);
  EXPECT_EQ(polydisc_cube_fold_bound(3).value(), 2.5);
  EXPECT_EQ(polydisc_cube_fold_bound(2).value(), 2.0);
}

TEST(PolydiscCube, BranchesAgreeAtBreakpoints) {
  for (long long n = 1; n <= 50; ++n) {
    // inner breakpoint N^2 + 1 and outer breakpoint N(N + 1) + 2
    const Rational inner(n * n + 1), outer(n * (n + 1) + 2);
    ASSERT_EQ((inner + 2 * n) / (n + 1), Rational(n + 1));
    ASSERT_EQ((outer + 2 * n) / (n + 1), Rational(n + 2));
    ASSERT_EQ(polydisc_cube_fold_bound(inner.convert_to<double>()).value(), static_cast<double>(n + 1));
    ASSERT_EQ(polydisc_cube_fold_bound(outer.convert_to<double>()).value(), static_cast<double>(n + 2));
  }
}

TEST(PolydiscFolding, Nondecreasing) {
  double pb = 0, pc = 0;
  for (double a = 1; a <= 200; a += 0.01) {
    const double b = polydisc_ball_fold_bound(a).value(), c = polydisc_cube_fold_bound(a).value();
    ASSERT_GE(b, pb - 1e-12) << a;
    ASSERT_GE(c, pc - 1e-12) << a;
    pb = b;
    pc = c;
  }
}

TEST(PolydiscFolding, DeficiencyAtBreakpoints) {
  for (long long k = 1; k <= 100; ++k) {
    const double m = static_cast<double>(k * k - k + 1);
    const double a = 2 * m;
    EXPECT_NEAR(polydisc_ball_fold_bound(a).value() - std::sqrt(2 * a), 2.0 * k + 1 - 2 * std::sqrt(m), 1e-12);
  }
}

TEST(HigherCube, Examples) {
  EXPECT_EQ(polydisc_cube_fold_bound(6, 3).value(), 3.0);
  EXPECT_EQ(polydisc_cube_fold_bound(8, 3).value(), 3.0);
  EXPECT_EQ(polydisc_cube_fold_bound(5, 2).value(), polydisc_cube_fold_bound(5).value());
  EXPECT_EQ(kind_of([] { polydisc_cube_fold_bound(5, 1); }), ErrorKind::InvalidArgument);
}

TEST(HigherCube, ReducesToFourDimensions) {
  for (double a = 1; a <= 150; a += 0.125) ASSERT_EQ(polydisc_cube_fold_bound(a, 2).value(), polydisc_cube_fold_bound(a).value()) << a;
}

TEST(HigherCube, ContinuousInA) {
  for (int n = 3; n <= 5; ++n) {
    double prev = polydisc_cube_fold_bound(1, n).value();
    for (double a = 1.001; a <= 200; a += 0.001) {
      const double v = polydisc_cube_fold_bound(a, n).value();
      ASSERT_LE(std::abs(v - prev), 0.01) << "n=" << n << " a=" << a;
      prev = v;
    }
  }
}

TEST(Diagonal, Examples) {
  const DiagonalBound three = diagonal_cube_bound(3, 2);
  EXPECT_EQ(three.bound, 8.0);
  EXPECT_TRUE(three.reduces);
  EXPECT_EQ(diagonal_cube_bound(2, 2).bound, 4.5);
  EXPECT_FALSE(diagonal_cube_bound(2, 2).reduces);
  EXPECT_FALSE(diagonal_cube_bound(1 + std::sqrt(2.0), 2).reduces);
  for (double r = 0.5; r < 6; r += 0.01) {
    const DiagonalBound d = diagonal_cube_bound(r, 3);
    if (std::abs(r - (1 + std::sqrt(2.0))) > 1e-6) {
      EXPECT_EQ(d.reduces, d.bound < r * r) << r;
    }
  }
}

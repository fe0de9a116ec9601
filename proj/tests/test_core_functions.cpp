#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "hestondist/core_functions.hpp"
#include "hestondist/detail/trig_kernels.hpp"
#include "hestondist/level_sets.hpp"
#include "hestondist/point_metric.hpp"
#include "support/oracles.hpp"

using namespace hestondist;

namespace {

std::vector<double> open_angles(int n, double lo = 0.0, double hi = kTwoPi) {
  std::vector<double> out;
  for (int i = 1; i < n; ++i) {
    out.push_back(lo + (hi - lo) * i / n);
  }
  return out;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

}  // namespace

TEST(Psi, KnownValues) {
  EXPECT_NEAR(psi(kPi), kHalfPi, 1e-15);
  EXPECT_NEAR(psi(1.5 * kPi), 1.5 * kPi + 1.0, 1e-13);
  EXPECT_NEAR(psi(1e-8) / 1e-8, 1.0 / 3.0, 1e-15);
}

TEST(Psi, OddAndIncreasing) {
  double prev = 0.0;
  for (double t : open_angles(400)) {
    EXPECT_EQ(psi(-t), -psi(t));
    EXPECT_GT(psi(t), prev);
    prev = psi(t);
  }
}

TEST(Psi, DomainErrors) {
  EXPECT_THROW(psi(0.0), DomainError);
  EXPECT_THROW(psi(kTwoPi), DomainError);
  EXPECT_THROW(psi(-7.0), DomainError);
  EXPECT_THROW(psi(std::nan("")), DomainError);
}

TEST(Psi, MatchesLiteralFormula) {
  for (double t : open_angles(50, 0.05, kTwoPi - 0.05)) {
    EXPECT_LT(rel(psi(t), static_cast<double>(oracle::psi(t))), 1e-13) << t;
  }
}

TEST(FOf, KnownValues) {
  EXPECT_NEAR(f_of(1.0, kPi), kPi + 2.0, 1e-14);
  for (double t : {0.3, 1.0, 3.0, 5.5}) {
    EXPECT_NEAR(f_of(0.0, t), psi(t), 1e-14 * psi(t));
  }
  EXPECT_EQ(f_of(3.0, 0.0), 0.0);
}

TEST(FOf, OddInDelta) {
  for (double v : {0.0, 0.5, 1.0, 7.0}) {
    for (double d : open_angles(30)) {
      EXPECT_EQ(f_of(v, -d), -f_of(v, d));
    }
  }
}

TEST(FOf, MatchesLiteralFormula) {
  for (double v : {0.0, 0.01, 0.7, 1.0, 3.0, 50.0}) {
    for (double d : open_angles(40, 0.05, kTwoPi - 0.05)) {
      EXPECT_LT(rel(f_of(v, d), static_cast<double>(oracle::f(v, d))), 1e-12) << v << " " << d;
    }
  }
}

TEST(FOf, StrictlyIncreasingInDelta) {
  for (double v : {0.0, 0.2, 1.0, 4.0, 100.0}) {
    double prev = f_of(v, 1e-6);
    for (double d : open_angles(500, 1e-6, kTwoPi - 1e-3)) {
      const double y = f_of(v, d);
      EXPECT_GT(y, prev) << v << " " << d;
      prev = y;
    }
  }
}

TEST(FOf, DomainErrors) {
  EXPECT_THROW(f_of(-1.0, 1.0), DomainError);
  EXPECT_THROW(f_of(1.0, kTwoPi), DomainError);
}

TEST(FOf, MajorantBound) {
  for (double v : {0.0, 0.1, 1.0, 2.5, 30.0}) {
    for (double d : open_angles(300, 0.0, kTwoPi - 1e-3)) {
      EXPECT_LE(f_of(v, d), g_major(v, d)) << v << " " << d;
    }
  }
}

TEST(LambdaBig, CriticalAndBoundaryValues) {
  for (double t : open_angles(20, 0.0, kPi)) {
    EXPECT_NEAR(lambda_big(x_crit(t), t), t * t / 2, 1e-13 * t * t);
  }
  for (double t : open_angles(20)) {
    EXPECT_LT(rel(lambda_big(psi(t), t), t * t / (1 - std::cos(t))), 1e-12);
  }
}

TEST(LambdaBig, GrowsWithoutBound) {
  EXPECT_GT(lambda_big(1e6, 1.0), 1e5);
  EXPECT_GT(lambda_big(1e12, 2.0), lambda_big(1e6, 2.0));
}

TEST(LambdaBig, MatchesLiteralFormula) {
  for (double t : open_angles(30, 0.1, kTwoPi - 0.1)) {
    for (double dx : {0.0, 0.3, 2.0, 40.0}) {
      const double x = psi(t) + dx;
      EXPECT_LT(rel(lambda_big(x, t), static_cast<double>(oracle::lambda(x, t))), 1e-10)
          << t << " " << x;
    }
  }
}

TEST(LambdaBig, ReflectedForNegativeAngles) {
  for (double t : {0.4, 2.0, 4.0}) {
    const double x = psi(t) + 0.7;
    EXPECT_EQ(lambda_big(-x, -t), lambda_big(x, t));
  }
}

TEST(LambdaBig, RejectsNegativeRadicand) {
  // Far left of the level set the radicand is negative.
  EXPECT_THROW(lambda_big(-10.0, 1.0), DomainError);
  EXPECT_THROW(lambda_big(1.0, 0.0), DomainError);
  EXPECT_LT(lambda_radicand(-10.0, 1.0), 0.0);
}

TEST(Coefficients, KnownValues) {
  EXPECT_NEAR(coef_A(kPi), -2.0 / kPi, 1e-15);
  EXPECT_NEAR(coef_B(kPi), 2.0 / kPi, 1e-15);
  for (double t : open_angles(40)) {
    EXPECT_NEAR(coef_B(t) * psi(t), 1.0, 1e-14);
  }
}

TEST(Coefficients, Monotone) {
  double prev_a = -coef_A(1e-3);
  double prev_b = coef_B(1e-3);
  for (double t : open_angles(300, 1e-3, kTwoPi - 1e-3)) {
    EXPECT_GT(-coef_A(t), prev_a);
    EXPECT_LT(coef_B(t), prev_b);
    prev_a = -coef_A(t);
    prev_b = coef_B(t);
  }
}

TEST(Coefficients, MatchLiteralFormula) {
  for (double t : open_angles(30, 0.1, kTwoPi - 0.1)) {
    EXPECT_LT(rel(coef_A(t), static_cast<double>(oracle::coef_A(t))), 1e-12);
    EXPECT_LT(rel(coef_B(t), static_cast<double>(oracle::coef_B(t))), 1e-12);
  }
}

TEST(AuxiliaryFunctions, KnownValues) {
  EXPECT_NEAR(x_crit(kPi), kHalfPi, 1e-15);
  for (double g : {-2.0, 0.0, 0.5, 3.0}) {
    EXPECT_NEAR(zeta(g, kPi), kHalfPi, 1e-15);
    EXPECT_NEAR(zeta(g, 0.0), -g, 1e-15);
  }
  EXPECT_NEAR(xi(kPi), kPi, 1e-15);
  EXPECT_LT(eta(1e-6), 1e-5);
  EXPECT_GT(eta(kTwoPi - 1e-4), 1e6);
}

TEST(AuxiliaryFunctions, Monotonicity) {
  double pe = 0.0;
  for (double t : open_angles(300)) {
    EXPECT_GT(eta(t), pe);
    pe = eta(t);
  }
  for (double alpha : {0.3, 1.0, 5.0}) {
    const double top = 0.999 * std::acos(-1.0) * 2.0;
    double prev = 0.0;
    for (double t : open_angles(200, 0.0, top)) {
      if (psi(t) >= alpha) break;
      EXPECT_GT(eta_alpha(alpha, t), prev);
      prev = eta_alpha(alpha, t);
    }
  }
  for (double g : {0.0, 0.5, 2.0}) {
    double prev = zeta(g, 0.0);
    for (double t : open_angles(200, 0.0, kPi)) {
      EXPECT_GT(zeta(g, t), prev);
      prev = zeta(g, t);
    }
  }
  double prev = x_crit(0.0);
  for (double t : open_angles(200, 0.0, kPi)) {
    EXPECT_GT(x_crit(t), prev);
    prev = x_crit(t);
  }
}

TEST(AuxiliaryFunctions, XiDecreasesThenIncreases) {
  double prev = xi(1e-3);
  for (double t : open_angles(200, 1e-3, kPi)) {
    EXPECT_LT(xi(t), prev);
    prev = xi(t);
  }
  prev = xi(kPi);
  for (double t : open_angles(200, kPi, kTwoPi - 1e-3)) {
    EXPECT_GT(xi(t), prev);
    prev = xi(t);
  }
}

TEST(AuxiliaryFunctions, DomainErrors) {
  EXPECT_THROW(eta(0.0), DomainError);
  EXPECT_THROW(eta_alpha(1.0, 3.0), DomainError);  // psi(3) > 1
  EXPECT_THROW(eta_alpha(-1.0, 0.5), DomainError);
  EXPECT_THROW(zeta(0.0, 4.0), DomainError);
  EXPECT_THROW(x_crit(-0.1), DomainError);
  EXPECT_THROW(xi(kTwoPi), DomainError);
}

TEST(Roots, TangencyGivesDoubleRoot) {
  // The tangent line at the nearest point of a level set touches it once.
  for (double t : {0.5, 1.0, 2.0}) {
    const double beta = t / 2, gamma = std::tan(t / 2);
    EXPECT_NEAR(discriminant(beta, gamma, t), 0.0, 1e-12);
    EXPECT_TRUE(is_tangent(beta, gamma, t));
    const double expected = coef_A(t) / (1.0 - gamma * coef_B(t));
    EXPECT_NEAR(s_plus(beta, gamma, t), expected, 1e-6);
    EXPECT_NEAR(s_minus(beta, gamma, t), expected, 1e-6);
  }
}

TEST(Roots, VerticalLineMatchesLevelCurve) {
  for (double t : {0.3, 1.2, 2.5, 4.0}) {
    for (double dx : {0.0, 0.1, 1.0, 10.0}) {
      const double beta = psi(t) + dx;
      const double s = s_plus(beta, 0.0, t);
      EXPECT_NEAR(s * s, curve_v(t, beta), 1e-11 * std::max(1.0, s * s));
    }
  }
}

TEST(Roots, BoundaryIntersection) {
  // beta = psi(theta), gamma > psi(theta): one intersection on v = 0.
  for (double t : {0.5, 1.5, 3.0}) {
    const double beta = psi(t), gamma = psi(t) + 1.3;
    const double sp = s_plus(beta, gamma, t);
    const double sm = s_minus(beta, gamma, t);
    const double other = -2.0 * coef_A(t) / (gamma * coef_B(t) - 1.0);
    EXPECT_NEAR(std::min(std::abs(sp), std::abs(sm)), 0.0, 1e-14);
    EXPECT_NEAR(std::max(sp, sm), other, 1e-12 * other);
  }
}

TEST(Roots, MatchLiteralFormula) {
  for (double t : {0.4, 1.0, 2.0, 3.5}) {
    for (double b : {0.2, 1.0, 3.0}) {
      for (double g : {-1.0, 0.5, 4.0}) {
        if (discriminant(b, g, t) < 0.0) continue;
        EXPECT_LT(rel(s_plus(b, g, t), static_cast<double>(oracle::s_plus(b, g, t))), 1e-10);
        EXPECT_LT(rel(s_minus(b, g, t), static_cast<double>(oracle::s_minus(b, g, t))), 1e-10);
      }
    }
  }
}

TEST(Roots, Errors) {
  const double t = 1.0;
  EXPECT_THROW(s_plus(0.0, psi(t), t), DivisionDegenerateError);
  EXPECT_THROW(s_minus(0.0, psi(t), t), DivisionDegenerateError);
  EXPECT_NO_THROW(s_tangent(0.0, t));
  // A vertical line left of psi(theta) misses the level set.
  EXPECT_THROW(s_plus(-5.0, 0.0, t), DomainError);
  EXPECT_THROW(lambda_plus(0.01, 0.0, t), DomainError);  // S+ < 0
}

TEST(BranchValues, VerticalLineAgreesWithLambda) {
  for (double t : {0.2, 1.0, 2.5, 4.5}) {
    for (double dx : {0.05, 0.5, 5.0}) {
      const double beta = psi(t) + dx;
      EXPECT_LT(rel(lambda_plus(beta, 0.0, t), lambda_big(beta, t)), 1e-12);
    }
  }
}

TEST(BranchValues, MatchLiteralFormula) {
  for (double t : {0.5, 1.5, 3.0}) {
    const double b = 0.3, g = 2.0;
    if (discriminant(b, g, t) < 0.0) continue;
    const auto sp = oracle::s_plus(b, g, t), sm = oracle::s_minus(b, g, t);
    if (sp >= 0) {
      EXPECT_LT(rel(lambda_plus(b, g, t), static_cast<double>(oracle::lambda_from_s(sp, t))), 1e-10);
    }
    if (sm >= 0) {
      EXPECT_LT(rel(lambda_minus(b, g, t), static_cast<double>(oracle::lambda_from_s(sm, t))),
                1e-10);
    }
  }
}

TEST(BranchValues, PlusNotAboveMinusBeyondHalfTurn) {
  for (double t : {kPi, 3.5, 4.5}) {
    for (double b : {2.0, 5.0}) {
      for (double g : {3.0, 8.0}) {
        if (discriminant(b, g, t) < 0.0 || s_plus(b, g, t) < 0.0 || s_minus(b, g, t) < 0.0) {
          continue;
        }
        EXPECT_LE(lambda_plus(b, g, t), lambda_minus(b, g, t) * (1 + 1e-14));
      }
    }
  }
}

TEST(Bounds, MajorantJoint) {
  for (double v : {0.0, 1.0, 9.0}) {
    const double w = v + std::sqrt(v) + 1.0;
    const double joint = kPi * kPi * kPi / 12.0 * w;
    EXPECT_NEAR(g_major(v, kPi), joint, 1e-13 * joint);
    EXPECT_NEAR(g_major(v, std::nextafter(kPi, 7.0)), joint, 1e-12 * joint);
    EXPECT_NEAR(h_lower(joint, v), kPi, 1e-14);
    EXPECT_NEAR(h_lower(std::nextafter(joint, 1e9), v), kPi, 1e-12);
  }
}

TEST(Bounds, LowerBoundBelowDelta) {
  for (double v : {0.0, 0.3, 1.0, 10.0}) {
    for (double x : {1e-6, 0.1, 1.0, 10.0, 1e3, 1e6}) {
      EXPECT_LE(h_lower(x, v), delta_of(x, v) * (1 + 1e-15)) << x << " " << v;
    }
  }
}

TEST(Bounds, TBound) {
  EXPECT_EQ(t_bound({0, 1}, {0, 1}), 0.0);
  EXPECT_GT(t_bound({0, 1}, {1, 1}), 0.0);
  EXPECT_THROW(h_lower(0.0, 1.0), DomainError);
  EXPECT_THROW(g_major(1.0, 0.0), DomainError);
}

TEST(SeriesSwitch, ClosedAndSeriesPathsAgree) {
  using namespace hestondist::detail;
  const double t = kSeriesThreshold;
  EXPECT_LT(rel(psi_closed(t), psi_series(t)), 1e-9);
  EXPECT_LT(rel(coef_A_closed(t), coef_A_series(t)), 1e-9);
  EXPECT_LT(rel(1.0 / psi_closed(t), 1.0 / psi_series(t)), 1e-9);
  EXPECT_LT(rel(sq_over_omc_closed(t), sq_over_omc_series(t)), 1e-9);
  for (double v : {0.0, 0.5, 1.0, 4.0}) {
    EXPECT_LT(rel(f_closed(v, t), f_series(v, t)), 1e-9);
  }
  for (double dx : {0.0, 1e-6, 0.5, 3.0}) {
    const double x = psi_series(t) + dx;
    EXPECT_LT(rel(lambda_closed(x, t), lambda_series(x, t)), 1e-9) << dx;
  }
}

TEST(SeriesSwitch, PublicFunctionsContinuousAcrossThreshold) {
  const double t = detail::kSeriesThreshold;
  const double below = std::nextafter(t, 0.0);
  EXPECT_LT(rel(psi(below), psi(t)), 1e-9);
  EXPECT_LT(rel(coef_A(below), coef_A(t)), 1e-9);
  EXPECT_LT(rel(coef_B(below), coef_B(t)), 1e-9);
  EXPECT_LT(rel(f_of(2.0, below), f_of(2.0, t)), 1e-9);
  EXPECT_LT(rel(lambda_big(0.5, below), lambda_big(0.5, t)), 1e-9);
}

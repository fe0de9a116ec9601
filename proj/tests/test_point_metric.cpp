#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hestondist/core_functions.hpp"
#include "hestondist/inverse_functions.hpp"
#include "hestondist/point_metric.hpp"
#include "support/oracles.hpp"

using namespace hestondist;

namespace {

ManifoldPoint random_point(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> ux(-50.0, 50.0), uv(0.0, 100.0);
  return {ux(gen), uv(gen)};
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

}  // namespace

TEST(DeltaOf, Examples) {
  for (double v : {0.0, 0.5, 1.0, 9.0}) {
    EXPECT_EQ(delta_of(0.0, v), 0.0);
  }
  for (double x : {0.1, 1.0, 7.0}) {
    EXPECT_NEAR(delta_of(x, 0.0), psi_inv(x), 1e-12);
  }
  EXPECT_NEAR(delta_of(kPi + 2.0, 1.0), kPi, 1e-12);
}

TEST(DeltaOf, SignAndOddness) {
  for (double x : {0.01, 0.5, 3.0, 80.0}) {
    for (double v : {0.0, 0.3, 2.0}) {
      const double d = delta_of(x, v);
      EXPECT_GT(d, 0.0);
      EXPECT_EQ(delta_of(-x, v), -d);
    }
  }
}

TEST(DeltaOf, SolvesTheDefiningEquation) {
  for (double x : {1e-6, 0.2, 1.0, 5.0, 1e3, 1e6}) {
    for (double v : {0.0, 0.1, 1.0, 30.0}) {
      const double d = delta_of(x, v);
      EXPECT_LT(rel(f_of(v, d), x), 1e-10) << x << " " << v;
      EXPECT_NEAR(d, static_cast<double>(oracle::delta(x, v)), 1e-9 * std::max(1.0, d));
    }
  }
}

TEST(DeltaOf, DomainErrors) {
  EXPECT_THROW(delta_of(1.0, -1.0), DomainError);
  EXPECT_THROW(delta_of(std::nan(""), 1.0), DomainError);
}

TEST(Dist, Examples) {
  EXPECT_NEAR(dist({0, 1}, {0, 4}), 2.0, 1e-14);
  EXPECT_NEAR(dist({0, 1}, {kPi + 2.0, 1}), kPi * std::sqrt(2.0), 1e-12);
  for (double a : {0.01, 0.5, 3.0}) {
    EXPECT_NEAR(dist({0, a}, {0, 4 * a}), 2 * std::sqrt(a), 1e-13);
  }
  EXPECT_EQ(dist({3, 2}, {3, 2}), 0.0);
}

TEST(Dist, BoundaryCases) {
  EXPECT_THROW(dist({0, 0}, {1, 0}), BoundaryPairError);
  EXPECT_EQ(dist({1, 0}, {1, 0}), 0.0);
  // One point on the boundary.
  EXPECT_NEAR(dist({0, 0}, {0, 1}), 2.0, 1e-14);
  EXPECT_NEAR(dist({0, 1}, {psi(kPi), 0}), kPi, 1e-12);
  EXPECT_THROW(dist({0, -1}, {0, 1}), DomainError);
}

TEST(Dist, MatchesLiteralFormulas) {
  auto gen = oracle::rng(7);
  std::uniform_real_distribution<double> ux(-20.0, 20.0), uv(0.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double x = ux(gen), v = uv(gen);
    const double d = dist({0, 1}, {x, v});
    EXPECT_LT(rel(d, static_cast<double>(oracle::dist_from_base(x, v))), 1e-8) << x << " " << v;
    EXPECT_LT(rel(d, static_cast<double>(oracle::dist_from_base_alt(x, v))), 1e-8) << x << " " << v;
  }
}

TEST(Dist, Symmetry) {
  auto gen = oracle::rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_point(gen), q = random_point(gen);
    EXPECT_LT(rel(dist(p, q), dist(q, p)), 1e-10);
    EXPECT_LT(rel(dist(p, q), dist({-p.x, p.v}, {-q.x, q.v})), 1e-10);
  }
}

TEST(Dist, TranslationAndScaling) {
  auto gen = oracle::rng(13);
  std::uniform_real_distribution<double> shift(-30.0, 30.0), scale(0.01, 20.0);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_point(gen), q = random_point(gen);
    const double d = dist(p, q);
    const double s = shift(gen), a = scale(gen);
    EXPECT_LT(rel(dist({p.x + s, p.v}, {q.x + s, q.v}), d), 1e-10);
    EXPECT_LT(rel(dist({a * p.x, a * p.v}, {a * q.x, a * q.v}), std::sqrt(a) * d), 1e-10);
  }
}

TEST(Dist, TwoSidedEstimate) {
  auto gen = oracle::rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_point(gen), q = random_point(gen);
    const double t = t_bound(p, q), d = dist(p, q);
    EXPECT_LE(t, d);
    EXPECT_LE(d, 12 * t);
  }
}

TEST(Dist, ChartMonotonicity) {
  const double thetas[] = {0.0, 0.5, 1.5, 3.0, 5.0, 6.2};
  const double vs[] = {1.0, 1.5, 4.0, 20.0};
  for (double t1 : thetas) {
    for (double t2 : thetas) {
      if (t2 < t1) continue;
      for (double v1 : vs) {
        for (double v2 : vs) {
          if (v2 < v1) continue;
          const double a = dist({0, 1}, from_delta({t1, v1}));
          const double b = dist({0, 1}, from_delta({t2, v2}));
          EXPECT_LE(a, b * (1 + 1e-12)) << t1 << " " << v1 << " " << t2 << " " << v2;
        }
      }
    }
  }
}

TEST(Dist, HorizontalMonotonicity) {
  for (double v : {0.0, 0.3, 1.0, 5.0}) {
    double prev = dist({0, 1}, {0, v});
    for (int i = 1; i <= 200; ++i) {
      const double d = dist({0, 1}, {0.25 * i, v});
      EXPECT_GE(d, prev * (1 - 1e-12));
      prev = d;
    }
  }
}

TEST(Dist, GrowthLimit) {
  for (double beta : {0.0, 1.0, 10.0}) {
    EXPECT_NEAR(dist({0, 1}, {beta, 1e8}) / 1e4, 2.0, 1e-3);
  }
}

TEST(Dist, ConsistentWithLambda) {
  auto gen = oracle::rng(19);
  std::uniform_real_distribution<double> ux(-20.0, 20.0), uv(0.0, 20.0);
  for (int i = 0; i < 300; ++i) {
    const double x = ux(gen), v = uv(gen);
    const double d = dist({0, 1}, {x, v});
    EXPECT_LT(rel(0.5 * d * d, lambda_big(x, delta_of(x, v))), 1e-9) << x << " " << v;
  }
}

TEST(Chart, Examples) {
  const auto d = to_delta({0, 7});
  EXPECT_EQ(d.theta, 0.0);
  EXPECT_EQ(d.v, 7.0);
  const auto p = from_delta({kPi, 1});
  EXPECT_NEAR(p.x, kPi + 2, 1e-14);
  EXPECT_EQ(p.v, 1.0);
}

TEST(Chart, RoundTrip) {
  auto gen = oracle::rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_point(gen);
    const auto q = from_delta(to_delta(p));
    EXPECT_NEAR(q.x, p.x, 1e-10 * std::max(1.0, std::abs(p.x)));
    EXPECT_EQ(q.v, p.v);
  }
}

TEST(DistCorrelated, Examples) {
  const auto id = CorrelationFrame::make(1.0, 0.0);
  EXPECT_EQ(dist_correlated(id, {0.3, 2}, {-1, 5}), dist({0.3, 2}, {-1, 5}));
  EXPECT_NEAR(dist_correlated(CorrelationFrame::make(2.0, 0.0), {0, 1}, {0, 4}), 1.0, 1e-14);
}

TEST(DistCorrelated, MatchesNormalizedReduction) {
  auto gen = oracle::rng(29);
  std::uniform_real_distribution<double> uc(0.2, 3.0), ur(-0.95, 0.95), ux(-5.0, 5.0),
      uv(0.05, 5.0);
  for (int i = 0; i < 200; ++i) {
    const auto f = CorrelationFrame::make(uc(gen), ur(gen));
    const ManifoldPoint p0{ux(gen), uv(gen)}, p1{ux(gen), uv(gen)};
    const double rb = std::sqrt(1 - f.rho * f.rho);
    const double y0 = (f.c * p0.x - f.rho * p0.v) / rb;
    const double y1 = (f.c * p1.x - f.rho * p1.v) / rb;
    const double expected =
        std::sqrt(p0.v) / f.c * dist({0, 1}, {(y1 - y0) / p0.v, p1.v / p0.v});
    EXPECT_LT(rel(dist_correlated(f, p0, p1), expected), 1e-10);
  }
}

TEST(CorrelationFrame, Validation) {
  EXPECT_THROW(CorrelationFrame::make(0.0, 0.0), DomainError);
  EXPECT_THROW(CorrelationFrame::make(1.0, 1.0), DomainError);
  EXPECT_THROW(CorrelationFrame::make(1.0, -1.5), DomainError);
  EXPECT_NEAR(CorrelationFrame::make(1.0, 0.6).rho_bar(), 0.8, 1e-15);
}

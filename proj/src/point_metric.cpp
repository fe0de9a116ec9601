#include "hestondist/point_metric.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "hestondist/core_functions.hpp"
#include "hestondist/scalar_solvers.hpp"

namespace hestondist {
namespace {

void check_point(ManifoldPoint p, const char* fn) {
  if (!std::isfinite(p.x) || !std::isfinite(p.v) || p.v < 0.0) {
    throw DomainError(std::string(fn) + ": point must be finite with v >= 0");
  }
}

// Distance from (0, 1) to (x, v).
double dist_from_base(double x, double v) {
  const double delta = delta_of(x, v);
  const double rv = std::sqrt(v);
  if (delta == 0.0) {
    return 2.0 * std::abs(rv - 1.0);
  }
  const double q = std::sin(0.25 * delta);
  const double d = rv - 1.0;
  return std::abs(delta) / std::abs(std::sin(0.5 * delta)) * std::sqrt(d * d + 4.0 * rv * q * q);
}

}  // namespace

double delta_of(double x, double v) {
  if (!std::isfinite(x) || !std::isfinite(v) || v < 0.0) {
    throw DomainError("delta_of: requires finite x and v >= 0");
  }
  if (x == 0.0) {
    return 0.0;
  }
  const double a = std::abs(x);
  auto f = [v](double d) { return f_of(v, d); };

  double lo = h_lower(a, v);
  for (int k = 0; f(lo) > a; ++k) {
    lo *= 0.5;
    if (k > 1100) {
      throw ConvergenceError("delta_of: lower bracket search failed");
    }
  }
  double hi = lo;
  for (int k = 1; f(hi) < a; ++k) {
    const double next = kTwoPi - (kTwoPi - lo) * std::ldexp(1.0, -k);
    if (k > 200 || !(next < kTwoPi)) {
      throw ConvergenceError("delta_of: |x| = " + std::to_string(a) +
                             " is beyond the reach of double precision near 2pi");
    }
    hi = next;
  }
  double root = hi;
  if (lo < hi) {
    RootOptions opts;
    opts.tol = 0.0;
    opts.rel_tol = 4.0 * std::numeric_limits<double>::epsilon();
    root = solve_monotone(f, {lo, hi}, a, opts).value;
  }
  return std::copysign(root, x);
}

double dist(ManifoldPoint p0, ManifoldPoint p1) {
  check_point(p0, "dist");
  check_point(p1, "dist");
  if (p0 == p1) {
    return 0.0;
  }
  if (p0.v == 0.0 && p1.v == 0.0) {
    throw BoundaryPairError("dist: both points lie on the boundary v = 0");
  }
  if (p0.v == 0.0) {
    std::swap(p0, p1);
  }
  return std::sqrt(p0.v) * dist_from_base((p1.x - p0.x) / p0.v, p1.v / p0.v);
}

double dist_correlated(const CorrelationFrame& frame, ManifoldPoint p0, ManifoldPoint p1) {
  const CorrelationFrame f = CorrelationFrame::make(frame.c, frame.rho);
  const double rb = f.rho_bar();
  auto map = [&](ManifoldPoint p) {
    return ManifoldPoint{(f.c * p.x - f.rho * p.v) / rb, p.v};
  };
  return dist(map(p0), map(p1)) / f.c;
}

DeltaCoordinate to_delta(ManifoldPoint p) {
  check_point(p, "to_delta");
  return {delta_of(p.x, p.v), p.v};
}

ManifoldPoint from_delta(DeltaCoordinate d) {
  if (!std::isfinite(d.v) || d.v < 0.0 || !(std::abs(d.theta) < kTwoPi)) {
    throw DomainError("from_delta: requires |theta| < 2pi and v >= 0");
  }
  return {f_of(d.v, d.theta), d.v};
}

}  // namespace hestondist

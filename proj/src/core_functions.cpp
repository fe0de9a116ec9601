#include "hestondist/core_functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hestondist/detail/trig_kernels.hpp"

namespace hestondist {
namespace {

using detail::kSeriesThreshold;

void require_finite(double value, const char* fn, const char* arg) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(fn) + ": " + arg + " must be finite");
  }
}

void require_open_angle(double theta, const char* fn) {
  require_finite(theta, fn, "theta");
  if (!(theta > 0.0 && theta < kTwoPi)) {
    throw DomainError(std::string(fn) + ": theta must lie in (0, 2pi), got " +
                      std::to_string(theta));
  }
}

void require_closed_half_turn(double theta, const char* fn) {
  require_finite(theta, fn, "theta");
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw DomainError(std::string(fn) + ": theta must lie in [0, pi], got " +
                      std::to_string(theta));
  }
}

// psi^2 A^2 - (psi - gamma)(psi - beta): the discriminant scaled by psi^2.
double scaled_discriminant(double beta, double gamma, double psi_t, double a) {
  const double pa = psi_t * a;
  return pa * pa - (psi_t - gamma) * (psi_t - beta);
}

double tangency_slack(double a) { return 1e-12 * std::max(1.0, a * a); }

// sqrt of the scaled discriminant, with tangency rounding folded to zero.
double scaled_root(double beta, double gamma, double theta, double psi_t, double a,
                   const char* fn) {
  const double dprime = scaled_discriminant(beta, gamma, psi_t, a);
  if (dprime >= 0.0) {
    return std::sqrt(dprime);
  }
  if (-dprime / (psi_t * psi_t) <= tangency_slack(a)) {
    return 0.0;
  }
  throw DomainError(std::string(fn) + ": negative discriminant at theta = " +
                    std::to_string(theta) + " (line misses the level set)");
}

}  // namespace

double psi(double theta) {
  require_finite(theta, "psi", "theta");
  if (theta == 0.0 || !(std::abs(theta) < kTwoPi)) {
    throw DomainError("psi: requires 0 < |theta| < 2pi, got " + std::to_string(theta));
  }
  return detail::psi_ext(theta);
}

double f_of(double v, double delta) {
  require_finite(v, "f_of", "v");
  require_finite(delta, "f_of", "delta");
  if (v < 0.0) {
    throw DomainError("f_of: v must be nonnegative");
  }
  if (!(std::abs(delta) < kTwoPi)) {
    throw DomainError("f_of: delta must lie in (-2pi, 2pi)");
  }
  if (delta == 0.0) {
    return 0.0;
  }
  const double a = std::abs(delta);
  const double value = a < kSeriesThreshold ? detail::f_series(v, a) : detail::f_closed(v, a);
  return std::copysign(value, delta);
}

double lambda_radicand(double x, double theta) {
  require_finite(x, "lambda_radicand", "x");
  require_finite(theta, "lambda_radicand", "theta");
  if (theta == 0.0 || !(std::abs(theta) < kTwoPi)) {
    throw DomainError("lambda_radicand: requires 0 < |theta| < 2pi");
  }
  if (theta < 0.0) {
    x = -x;
    theta = -theta;
  }
  // N / sin^2(theta/2) with N = k^2 + (theta - sin theta)(1 - cos theta)(x - psi).
  const double k = detail::chord_defect(theta);
  const double n = k * k + detail::theta_minus_sin(theta) * detail::one_minus_cos(theta) *
                               (x - detail::psi_ext(theta));
  const double s = std::sin(0.5 * theta);
  return n / (s * s);
}

double lambda_big(double x, double theta) {
  require_finite(x, "lambda_big", "x");
  require_finite(theta, "lambda_big", "theta");
  if (theta == 0.0 || !(std::abs(theta) < kTwoPi)) {
    throw DomainError("lambda_big: requires 0 < |theta| < 2pi, got " + std::to_string(theta));
  }
  if (theta < 0.0) {
    x = -x;
    theta = -theta;
  }
  const double value =
      theta < kSeriesThreshold ? detail::lambda_series(x, theta) : detail::lambda_closed(x, theta);
  if (std::isnan(value)) {
    throw DomainError("lambda_big: negative radicand, x = " + std::to_string(x) +
                      " is left of the level set theta = " + std::to_string(theta));
  }
  return value;
}

double coef_A(double theta) {
  require_open_angle(theta, "coef_A");
  return detail::coef_A_ext(theta);
}

double coef_B(double theta) {
  require_open_angle(theta, "coef_B");
  return 1.0 / detail::psi_ext(theta);
}

double eta(double theta) {
  require_open_angle(theta, "eta");
  return detail::psi_ext(theta) * (1.0 - detail::coef_A_ext(theta));
}

double eta_alpha(double alpha, double theta) {
  require_finite(alpha, "eta_alpha", "alpha");
  if (!(alpha > 0.0)) {
    throw DomainError("eta_alpha: alpha must be positive");
  }
  require_open_angle(theta, "eta_alpha");
  const double p = detail::psi_ext(theta);
  if (!(p < alpha)) {
    throw DomainError("eta_alpha: theta must lie below psi^{-1}(alpha)");
  }
  const double pa = p * detail::coef_A_ext(theta);
  return pa * pa / (alpha - p) + p;
}

double zeta(double gamma, double theta) {
  require_finite(gamma, "zeta", "gamma");
  require_closed_half_turn(theta, "zeta");
  return 0.5 * (theta + std::sin(theta) - gamma * (1.0 + std::cos(theta)));
}

double x_crit(double theta) {
  require_closed_half_turn(theta, "x_crit");
  return 0.5 * (theta + std::sin(theta));
}

double xi(double delta) {
  require_open_angle(delta, "xi");
  return delta * delta / detail::theta_minus_sin(delta);
}

double discriminant(double beta, double gamma, double theta) {
  require_finite(beta, "discriminant", "beta");
  require_finite(gamma, "discriminant", "gamma");
  require_open_angle(theta, "discriminant");
  const double p = detail::psi_ext(theta);
  return scaled_discriminant(beta, gamma, p, detail::coef_A_ext(theta)) / (p * p);
}

bool is_tangent(double beta, double gamma, double theta) {
  const double a = coef_A(theta);
  return std::abs(discriminant(beta, gamma, theta)) <= tangency_slack(a);
}

double s_plus(double beta, double gamma, double theta) {
  require_finite(beta, "s_plus", "beta");
  require_finite(gamma, "s_plus", "gamma");
  require_open_angle(theta, "s_plus");
  const double p = detail::psi_ext(theta);
  if (1.0 - gamma / p == 0.0) {
    throw DivisionDegenerateError("s_plus: 1 - gamma B(theta) = 0, use s_tangent");
  }
  const double a = detail::coef_A_ext(theta);
  const double root = scaled_root(beta, gamma, theta, p, a, "s_plus");
  // (A + sqrt(disc)) / (1 - gamma B), rationalized to avoid cancellation.
  return (p - beta) / (p * a - root);
}

double s_minus(double beta, double gamma, double theta) {
  require_finite(beta, "s_minus", "beta");
  require_finite(gamma, "s_minus", "gamma");
  require_open_angle(theta, "s_minus");
  const double p = detail::psi_ext(theta);
  if (1.0 - gamma / p == 0.0) {
    throw DivisionDegenerateError("s_minus: 1 - gamma B(theta) = 0, use s_tangent");
  }
  const double a = detail::coef_A_ext(theta);
  const double root = scaled_root(beta, gamma, theta, p, a, "s_minus");
  return (p * a - root) / (p - gamma);
}

double s_tangent(double beta, double theta) {
  require_finite(beta, "s_tangent", "beta");
  require_open_angle(theta, "s_tangent");
  const double p = detail::psi_ext(theta);
  return (p - beta) / (2.0 * p * detail::coef_A_ext(theta));
}

double lambda_plus(double beta, double gamma, double theta) {
  const double s = s_plus(beta, gamma, theta);
  if (s < 0.0) {
    throw DomainError("lambda_plus: S+ is negative, no intersection on the plus branch");
  }
  return detail::half_squared_on_level(s, theta);
}

double lambda_minus(double beta, double gamma, double theta) {
  const double s = s_minus(beta, gamma, theta);
  if (s < 0.0) {
    throw DomainError("lambda_minus: S- is negative, no intersection on the minus branch");
  }
  return detail::half_squared_on_level(s, theta);
}

double g_major(double v, double delta) {
  require_finite(v, "g_major", "v");
  if (v < 0.0) {
    throw DomainError("g_major: v must be nonnegative");
  }
  require_open_angle(delta, "g_major");
  const double w = v + std::sqrt(v) + 1.0;
  if (delta <= kPi) {
    return kPi * kPi / 12.0 * w * delta;
  }
  return std::pow(kPi, 8) / 12.0 * w * std::pow(kTwoPi - delta, -5);
}

double h_lower(double x, double v) {
  require_finite(x, "h_lower", "x");
  require_finite(v, "h_lower", "v");
  if (!(x > 0.0) || v < 0.0) {
    throw DomainError("h_lower: requires x > 0 and v >= 0");
  }
  const double w = v + std::sqrt(v) + 1.0;
  const double joint = kPi * kPi * kPi / 12.0 * w;
  if (x <= joint) {
    return 12.0 * x / (kPi * kPi * w);
  }
  return kTwoPi - std::pow(std::pow(kPi, 8) * w / (12.0 * x), 0.2);
}

double t_bound(ManifoldPoint p0, ManifoldPoint p1) {
  require_finite(p0.x, "t_bound", "x0");
  require_finite(p1.x, "t_bound", "x1");
  if (!(p0.v >= 0.0) || !(p1.v >= 0.0) || !std::isfinite(p0.v) || !std::isfinite(p1.v)) {
    throw DomainError("t_bound: v must be finite and nonnegative");
  }
  const double dx = p0.x - p1.x;
  const double dv = p0.v - p1.v;
  const double sq = dx * dx + dv * dv;
  if (sq == 0.0) {
    return 0.0;
  }
  return std::sqrt(sq) / (std::sqrt(p0.v) + std::sqrt(p1.v) + std::sqrt(std::sqrt(sq)));
}

}  // namespace hestondist

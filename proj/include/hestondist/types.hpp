#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "hestondist/errors.hpp"

namespace hestondist {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

/// A point (x, v) of the closed half-plane v >= 0. x is the log-price
/// coordinate and v the variance coordinate.
struct ManifoldPoint {
  double x = 0.0;
  double v = 1.0;

  friend bool operator==(const ManifoldPoint&, const ManifoldPoint&) = default;
};

/// The line {x = beta + gamma * v, v >= 0}.
struct LineParams {
  double beta = 0.0;
  double gamma = 0.0;
};

/// Angle in (-2pi, 2pi) that indexes level sets and geodesic arcs.
class DeltaAngle {
 public:
  constexpr DeltaAngle() = default;
  explicit DeltaAngle(double theta) : theta_(theta) {
    if (!(std::abs(theta) < kTwoPi)) {
      throw DomainError("DeltaAngle: theta must lie in (-2pi, 2pi), got " +
                        std::to_string(theta));
    }
  }
  constexpr double radians() const noexcept { return theta_; }
  constexpr operator double() const noexcept { return theta_; }

 private:
  double theta_ = 0.0;
};

/// Point expressed in the delta-chart: level-set index and variance.
struct DeltaCoordinate {
  double theta = 0.0;
  double v = 1.0;
};

/// Vol-of-vol c > 0 and correlation rho in (-1, 1). Use `make` to validate.
struct CorrelationFrame {
  double c = 1.0;
  double rho = 0.0;

  static CorrelationFrame make(double c, double rho) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw DomainError("CorrelationFrame: c must be positive and finite");
    }
    if (!(rho > -1.0 && rho < 1.0)) {
      throw DomainError("CorrelationFrame: rho must lie in (-1, 1)");
    }
    return CorrelationFrame{c, rho};
  }

  double rho_bar() const { return std::sqrt((1.0 - rho) * (1.0 + rho)); }
};

}  // namespace hestondist

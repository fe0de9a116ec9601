#pragma once

#include <cstddef>
#include <vector>

#include "hestondist/distance_solution.hpp"
#include "hestondist/types.hpp"

namespace hestondist {

enum class CurveForm {
  /// v = s^2 with s the rationalized root of the level-set quadratic.
  canonical,
  /// Affine part minus the square-root-of-affine part. Loses accuracy near
  /// x = psi(theta); kept for cross-checks.
  affine_split,
};

/// v such that the point (sign(theta) x, v) lies on the level set of theta.
/// Requires theta != 0 and x >= psi(|theta|).
double curve_v(double theta, double x, CurveForm form = CurveForm::canonical);

// First and second x-derivatives of curve_v for 0 < theta < 2pi, x >= psi(theta).
double curve_slope(double theta, double x);
double curve_curvature(double theta, double x);

struct LevelCurveSample {
  double theta = 0.0;
  double x = 0.0;
  double v = 0.0;
  double slope = 0.0;
  double curvature = 0.0;
};

/// `samples` points with x evenly spaced on [psi(theta), x_max], 0 < theta < 2pi.
std::vector<LevelCurveSample> sample_level_curve(double theta, double x_max, std::size_t samples);

/// Distance from (0, 1) to the level set of theta, |theta| < 2pi.
DistanceSolution dist_to_level_set(double theta);

/// Distance from (0, 1) to the horizontal line v = tau.
double dist_to_horizontal(double tau);

/// Nearest point ((theta + sin theta)/2, cos^2(theta/2)) of a level set, theta in [0, pi].
ManifoldPoint critical_point(double theta);

/// Angle where the critical curve meets the line; beta, gamma >= 0.
double theta_crit(LineParams line);

}  // namespace hestondist

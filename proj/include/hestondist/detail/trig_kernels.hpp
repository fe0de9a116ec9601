#pragma once

// Cancellation-free building blocks shared by the core formulas.
//
// Every ratio with a (theta - sin theta) or sin^2(theta/2) denominator has two
// evaluation paths: a closed form built from the stable primitives below and a
// truncated Taylor expansion (relative accuracy through theta^4) used for
// |theta| < kSeriesThreshold. Both are exposed so that tests can check that they
// agree at the switch point. The *_ext variants accept theta = 0 and return the
// limit value there; they take theta >= 0 only unless stated otherwise.

namespace hestondist::detail {

inline constexpr double kSeriesThreshold = 1e-4;

/// theta - sin(theta), accurate to a few ulps for every theta.
double theta_minus_sin(double theta);

/// 2 sin(theta/2) - theta cos(theta/2). Positive on (0, 2pi).
double chord_defect(double theta);

/// 1 - cos(theta) = 2 sin^2(theta/2).
double one_minus_cos(double theta);

// psi(theta) = (theta - sin theta) / (1 - cos theta); odd, psi(0) = 0.
double psi_closed(double theta);
double psi_series(double theta);
double psi_ext(double theta);

// A(theta) = (theta cos(theta/2) - 2 sin(theta/2)) / (theta - sin theta);
// even, A(0) = -1/2.
double coef_A_closed(double theta);
double coef_A_series(double theta);
double coef_A_ext(double theta);

// theta^2 / (1 - cos theta); even, value 2 at 0.
double sq_over_omc_closed(double theta);
double sq_over_omc_series(double theta);
double sq_over_omc_ext(double theta);

/// (delta + 2 sin(delta/2)) / (1 + cos(delta/2)); the sqrt(v) coefficient of f.
double omega(double delta);

// f(v, delta) = (sqrt v - 1)^2 psi(delta) + sqrt(v) omega(delta).
double f_closed(double v, double delta);
double f_series(double v, double delta);

/// Signed sqrt(v) of the point of Gamma_theta with abscissa x (theta > 0).
/// Negative when x < psi(theta): the second root of the level-set quadratic.
/// Returns NaN when the radicand is negative. `series` selects the Taylor
/// primitives.
double level_root(double x, double theta, bool series);

/// Half-squared distance theta^2/(1-cos theta) * ((s-1)^2 + 4 s sin^2(theta/4))
/// for a point with sqrt(v) = s on Gamma_theta. theta >= 0.
double half_squared_on_level(double s, double theta);

// Lambda(x, theta), theta > 0.
double lambda_closed(double x, double theta);
double lambda_series(double x, double theta);

}  // namespace hestondist::detail

#pragma once

// Scalar functions of the Heston manifold geometry, as seen from the base
// point (0, 1). All functions are pure and throw DomainError outside their
// domains instead of returning NaN.

#include "hestondist/types.hpp"

namespace hestondist {

/// psi(theta) = (theta - sin theta) / (1 - cos theta): the abscissa where the
/// level set Gamma_theta meets the boundary v = 0. Odd, strictly increasing on
/// (0, 2pi) onto (0, inf). Requires 0 < |theta| < 2pi.
double psi(double theta);

/// f(v, delta): abscissa of the point with variance v on the geodesic arc of
/// parameter delta. delta is found from x by solving f(v, delta) = x.
/// Odd in delta, f(0, delta) = psi(delta), f(v, 0) = 0.
/// Requires v >= 0 and |delta| < 2pi.
double f_of(double v, double delta);

/// Lambda(x, theta): half the squared distance from (0, 1) to the point of
/// Gamma_theta with abscissa x. Requires theta != 0 and a nonnegative radicand
/// 2(theta - sin theta)x + 2(1 - cos theta) - theta^2 (x mirrored for
/// theta < 0).
double lambda_big(double x, double theta);

/// Radicand of lambda_big for theta > 0: 2(theta - sin theta)x + 2(1 - cos theta) - theta^2.
double lambda_radicand(double x, double theta);

// Coefficients of the line/level-set quadratic
//   (1 - gamma B) v - 2 A sqrt(v) + 1 - beta B = 0,   0 < theta < 2pi.
double coef_A(double theta);
double coef_B(double theta);

/// eta(theta) = psi(theta)(1 - A(theta)), strictly increasing on (0, 2pi) onto (0, inf).
double eta(double theta);
/// eta_alpha(theta) = psi^2 A^2 / (alpha - psi) + psi on 0 < theta < psi^{-1}(alpha).
double eta_alpha(double alpha, double theta);
/// zeta_gamma(theta) = (theta + sin theta - gamma(1 + cos theta)) / 2 on [0, pi].
double zeta(double gamma, double theta);
/// Abscissa (theta + sin theta) / 2 of the nearest point of Gamma_theta, theta in [0, pi].
double x_crit(double theta);
/// xi(delta) = delta^2 / (delta - sin delta) on (0, 2pi); minimal at pi.
double xi(double delta);

/// A(theta)^2 - (1 - gamma B(theta))(1 - beta B(theta)). Raw value, so that
/// callers can apply their own tangency tolerance.
double discriminant(double beta, double gamma, double theta);

/// True when |discriminant| <= 1e-12 max(1, A^2): the line touches Gamma_theta.
bool is_tangent(double beta, double gamma, double theta);

// sqrt(v) of the intersections of L_{beta,gamma} with Gamma_theta. The result
// may be negative, meaning no intersection on that branch; callers reject it.
double s_plus(double beta, double gamma, double theta);
double s_minus(double beta, double gamma, double theta);
/// Single root when 1 - gamma B(theta) = 0.
double s_tangent(double beta, double theta);

// Half-squared distance from (0, 1) to the intersection point on each branch.
double lambda_plus(double beta, double gamma, double theta);
double lambda_minus(double beta, double gamma, double theta);

/// Invertible majorant g(v, delta) >= f(v, delta), 0 < delta < 2pi.
double g_major(double v, double delta);
/// Lower bound h(x, v) <= delta(x, v) obtained by inverting g. Requires x > 0, v >= 0.
double h_lower(double x, double v);
/// Comparison quantity T with T <= d_H(p0, p1) <= 12 T.
double t_bound(ManifoldPoint p0, ManifoldPoint p1);

}  // namespace hestondist

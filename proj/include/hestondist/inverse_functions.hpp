#pragma once

// Inverses of the monotone functions in core_functions.hpp, computed with
// solve_monotone on brackets that are grown until they contain the target.

namespace hestondist {

/// psi^{-1}: R -> (-2pi, 2pi), odd, psi_inv(0) = 0.
double psi_inv(double y);
/// eta^{-1}: (0, inf) -> (0, 2pi).
double eta_inv(double y);
/// Inverse of eta_alpha(alpha, .): (0, inf) -> (0, psi^{-1}(alpha)).
double eta_alpha_inv(double alpha, double y);
/// Inverse of zeta(gamma, .) on [0, pi]; gamma >= 0, y in [-gamma, pi/2].
double zeta_inv(double gamma, double y);
/// Inverse of x_crit on [0, pi]; y in [0, pi/2].
double x_crit_inv(double y);

}  // namespace hestondist

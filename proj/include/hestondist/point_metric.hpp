#pragma once

#include "hestondist/types.hpp"

namespace hestondist {

/// The unique delta in (-2pi, 2pi) with f(v, delta) = x.
double delta_of(double x, double v);

/// Riemannian distance between two points of the closed half-plane with
/// metric (dx^2 + dv^2) / v. Throws BoundaryPairError when both points lie on
/// v = 0 and differ.
double dist(ManifoldPoint p0, ManifoldPoint p1);

/// Distance for the correlated model with vol-of-vol c and correlation rho.
double dist_correlated(const CorrelationFrame& frame, ManifoldPoint p0, ManifoldPoint p1);

/// Chart (x, v) -> (delta_of(x, v), v) and its inverse.
DeltaCoordinate to_delta(ManifoldPoint p);
ManifoldPoint from_delta(DeltaCoordinate d);

}  // namespace hestondist

#include "hestondist/inverse_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hestondist/core_functions.hpp"
#include "hestondist/scalar_solvers.hpp"

namespace hestondist {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

RootOptions tight() {
  RootOptions o;
  o.tol = 0.0;
  o.rel_tol = 4.0 * kEps;
  return o;
}

// Inverse of an increasing fn on (0, top) with fn(0+) = 0 and fn(top-) = inf.
double invert_on_open(const ScalarFn& fn, double y, double top, const char* name) {
  if (!std::isfinite(y) || !(y > 0.0)) {
    throw DomainError(std::string(name) + ": argument must be positive and finite");
  }
  double lo = 0.5 * top;
  int k = 0;
  while (fn(lo) >= y) {
    lo *= 0.5;
    if (++k > 1100 || lo == 0.0) {
      throw ConvergenceError(std::string(name) + ": could not bracket from below");
    }
  }
  double gap = 0.5 * top;
  double hi = top - gap;
  k = 0;
  while (fn(hi) < y) {
    gap *= 0.5;
    const double next = top - gap;
    if (++k > 200 || next >= top || next == hi) {
      throw DomainError(std::string(name) + ": argument " + std::to_string(y) +
                        " exceeds the representable range");
    }
    hi = next;
  }
  if (hi <= lo) {
    return hi;
  }
  return solve_monotone(fn, {lo, hi}, y, tight()).value;
}

}  // namespace

double psi_inv(double y) {
  if (!std::isfinite(y)) {
    throw DomainError("psi_inv: argument must be finite");
  }
  if (y == 0.0) {
    return 0.0;
  }
  const double r = invert_on_open([](double t) { return psi(t); }, std::abs(y), kTwoPi, "psi_inv");
  return std::copysign(r, y);
}

double eta_inv(double y) {
  return invert_on_open([](double t) { return eta(t); }, y, kTwoPi, "eta_inv");
}

double eta_alpha_inv(double alpha, double y) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("eta_alpha_inv: alpha must be positive and finite");
  }
  const double top = psi_inv(alpha);
  return invert_on_open(
      [alpha, top](double t) {
        if (t >= top) {
          return std::numeric_limits<double>::infinity();
        }
        return eta_alpha(alpha, t);
      },
      y, top, "eta_alpha_inv");
}

double zeta_inv(double gamma, double y) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError("zeta_inv: gamma must be nonnegative");
  }
  if (!(y >= -gamma && y <= kHalfPi)) {
    throw DomainError("zeta_inv: argument outside [-gamma, pi/2]");
  }
  return solve_monotone([gamma](double t) { return zeta(gamma, t); }, {0.0, kPi}, y, tight())
      .value;
}

double x_crit_inv(double y) {
  if (!(y >= 0.0 && y <= kHalfPi)) {
    throw DomainError("x_crit_inv: argument outside [0, pi/2]");
  }
  return solve_monotone([](double t) { return x_crit(t); }, {0.0, kPi}, y, tight()).value;
}

}  // namespace hestondist

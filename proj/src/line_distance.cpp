#include "hestondist/line_distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hestondist/core_functions.hpp"
#include "hestondist/detail/trig_kernels.hpp"
#include "hestondist/inverse_functions.hpp"
#include "hestondist/level_sets.hpp"
#include "hestondist/point_metric.hpp"

namespace hestondist {
namespace {

// Open right ends psi^{-1}(gamma) are closed this far inside.
constexpr double kClip = 1e-9;
// Rounding slack for the discriminant and for S at interval ends.
constexpr double kSlack = 1e-9;

enum class Side { plus, minus };

// sqrt(v) of the intersection on one branch, for theta in [0, 2pi).
double branch_root(double beta, double gamma, double theta, Side side) {
  const double p = detail::psi_ext(theta);
  const double pa = p * detail::coef_A_ext(theta);
  const double cross = (p - gamma) * (p - beta);
  double dprime = pa * pa - cross;
  if (dprime < 0.0) {
    if (-dprime > kSlack * std::max({1.0, pa * pa, std::abs(cross)})) {
      throw DomainError("line misses the level set at theta = " + std::to_string(theta));
    }
    dprime = 0.0;
  }
  const double r = std::sqrt(dprime);
  double s = 0.0;
  if (side == Side::plus) {
    const double den = pa - r;
    if (den == 0.0) {
      throw DegenerateError("plus root undefined at theta = " + std::to_string(theta));
    }
    s = (p - beta) / den;
  } else {
    const double den = p - gamma;
    if (den == 0.0) {
      return std::numeric_limits<double>::infinity();
    }
    s = (pa - r) / den;
  }
  if (s < 0.0) {
    if (s < -kSlack) {
      throw DomainError("no intersection on this branch at theta = " + std::to_string(theta));
    }
    s = 0.0;
  }
  return s;
}

double branch_half_squared(double beta, double gamma, double theta, Side side) {
  return detail::half_squared_on_level(branch_root(beta, gamma, theta, side), theta);
}

struct Candidate {
  MinimizeResult result;
  Side side = Side::plus;
};

Candidate minimize_branch(double beta, double gamma, double lo, double hi, Side side,
                          const MinimizeOptions& options) {
  hi = std::max(lo, hi);
  auto fn = [=](double t) { return branch_half_squared(beta, gamma, t, side); };
  return {minimize_on_interval(fn, {lo, hi}, options), side};
}

const Candidate& pick(const Candidate& plus, const Candidate& minus) {
  const double scale = std::max(1.0, std::abs(minus.result.value));
  return plus.result.value <= minus.result.value + 1e-12 * scale ? plus : minus;
}

DistanceSolution finish(double half_squared, double theta, ManifoldPoint argmin, Branch branch,
                        const SolveReport& report) {
  DistanceSolution sol;
  sol.half_squared = std::max(0.0, half_squared);
  sol.value = std::sqrt(2.0 * sol.half_squared);
  sol.theta_at_argmin = theta;
  sol.argmin = argmin;
  sol.branch = branch;
  sol.report = report;
  return sol;
}

DistanceSolution from_candidate(double beta, double gamma, const Candidate& c, Branch branch) {
  const double theta = c.result.argmin;
  const double s = branch_root(beta, gamma, theta, c.side);
  const double v = s * s;
  return finish(c.result.value, theta, {beta + gamma * v, v}, branch, c.result.report);
}

// beta >= 0 and gamma != -beta; the caller has already reflected.
DistanceSolution dist_normalized(double beta, double gamma, const MinimizeOptions& options) {
  if (gamma == 0.0) {
    return dist_to_vertical_line(beta, VerticalWindow::standard, options);
  }
  if (gamma > 0.0) {
    if (beta == gamma) {
      const double lo = eta_inv(beta);
      const double hi = beta < kHalfPi ? 2.0 * beta : psi_inv(beta);
      const Candidate c = minimize_branch(beta, gamma, lo, hi, Side::plus, options);
      return from_candidate(beta, gamma, c, Branch::slanted_plus);
    }
    if (beta == 0.0) {
      const double hi = gamma < kHalfPi ? 2.0 * gamma : std::min(kPi, psi_inv(gamma) - kClip);
      const Candidate c = minimize_branch(beta, gamma, 0.0, hi, Side::minus, options);
      return from_candidate(beta, gamma, c, Branch::slanted_minus);
    }
    if (gamma > beta) {
      const double lo = eta_alpha_inv(gamma, beta);
      const bool plus_only = beta > kHalfPi && gamma > kHalfPi + 2.0 / (2.0 * beta - kPi);
      if (plus_only) {
        const Candidate c = minimize_branch(beta, gamma, lo, psi_inv(beta), Side::plus, options);
        return from_candidate(beta, gamma, c, Branch::slanted_plus);
      }
      // The cap can pass psi^{-1}(beta), beyond which the plus root is negative.
      const double cap = theta_crit({beta, gamma});
      const double hi_plus = std::min(cap, psi_inv(beta));
      const double hi_minus = std::min(cap, psi_inv(gamma) - kClip);
      const Candidate cp = minimize_branch(beta, gamma, lo, hi_plus, Side::plus, options);
      const Candidate cm = minimize_branch(beta, gamma, lo, hi_minus, Side::minus, options);
      const Candidate& c = pick(cp, cm);
      return from_candidate(beta, gamma, c,
                            c.side == Side::plus ? Branch::slanted_plus : Branch::slanted_minus);
    }
    const double lo = eta_alpha_inv(beta, gamma);
    const Candidate cp = minimize_branch(beta, gamma, lo, psi_inv(beta), Side::plus, options);
    const Candidate cm =
        minimize_branch(beta, gamma, lo, psi_inv(gamma) - kClip, Side::minus, options);
    const Candidate& c = pick(cp, cm);
    return from_candidate(beta, gamma, c,
                          c.side == Side::plus ? Branch::slanted_plus : Branch::slanted_minus);
  }

  const double g = -gamma;
  if (beta > g) {
    const Candidate c = minimize_branch(beta, gamma, 0.0, psi_inv(beta), Side::plus, options);
    return from_candidate(beta, gamma, c, Branch::left_slanted);
  }
  // Mirror image x -> -x: the line x = -beta + g v meets level sets of
  // positive angle on the minus branch; the angle in the original frame is -phi.
  const Candidate c = minimize_branch(-beta, g, 0.0, psi_inv(g) - kClip, Side::minus, options);
  const double phi = c.result.argmin;
  const double s = branch_root(-beta, g, phi, Side::minus);
  const double v = s * s;
  return finish(c.result.value, -phi, {beta + gamma * v, v}, Branch::left_slanted,
                c.result.report);
}

void require_line(double beta, double gamma, const char* fn) {
  if (!std::isfinite(beta) || !std::isfinite(gamma)) {
    throw DomainError(std::string(fn) + ": beta and gamma must be finite");
  }
}

}  // namespace

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::on_line:
      return "on-line";
    case Branch::vertical_kp:
      return "vertical-kp";
    case Branch::slanted_plus:
      return "slanted-plus";
    case Branch::slanted_minus:
      return "slanted-minus";
    case Branch::left_slanted:
      return "left-slanted";
    case Branch::tangent_exact:
      return "tangent-exact";
    case Branch::level_set:
      return "level-set";
    case Branch::horizontal:
      return "horizontal";
    case Branch::oracle:
      return "oracle";
  }
  return "unknown";
}

std::vector<AdmissibleInterval> admissible_intervals(double beta, double gamma) {
  require_line(beta, gamma, "admissible_intervals");
  if (beta < 0.0) {
    throw DomainError("admissible_intervals: beta must be nonnegative (reflect the line first)");
  }
  if (beta == 0.0 && gamma == 0.0) {
    return {{0.0, 0.0, false, false, true, true}};
  }
  if (gamma == 0.0) {
    return {{0.0, psi_inv(beta), true, false, true, false}};
  }
  if (gamma < 0.0) {
    return {{-psi_inv(-gamma), psi_inv(beta), true, false, true, false}};
  }
  if (beta == 0.0) {
    return {{0.0, psi_inv(gamma), false, true, false, true}};
  }
  if (beta == gamma) {
    return {{eta_inv(beta), psi_inv(beta), false, false, true, true}};
  }
  if (gamma > beta) {
    const double pb = psi_inv(beta);
    return {{eta_alpha_inv(gamma, beta), pb, false, false, true, true},
            {pb, psi_inv(gamma), true, true, false, true}};
  }
  const double pg = psi_inv(gamma);
  return {{eta_alpha_inv(beta, gamma), pg, false, true, true, true},
          {pg, psi_inv(beta), false, false, true, false}};
}

DistanceSolution dist_to_line(double beta, double gamma, const MinimizeOptions& options) {
  require_line(beta, gamma, "dist_to_line");
  if (gamma == -beta) {
    return finish(0.0, 0.0, {0.0, 1.0}, Branch::on_line, {});
  }
  const bool reflect = beta < 0.0 || (beta == 0.0 && gamma < 0.0);
  if (!reflect) {
    return dist_normalized(beta, gamma, options);
  }
  DistanceSolution sol = dist_normalized(-beta, -gamma, options);
  sol.argmin.x = -sol.argmin.x;
  sol.theta_at_argmin = -sol.theta_at_argmin;
  return sol;
}

Bracket vertical_window(double beta, VerticalWindow window) {
  if (!std::isfinite(beta) || !(beta > 0.0)) {
    throw DomainError("vertical_window: beta must be positive");
  }
  const bool close_regime = beta < kHalfPi;
  switch (window) {
    case VerticalWindow::standard:
      return close_regime ? Bracket{beta / 11.0, 2.0 * beta} : Bracket{1.0 / 7.0, kPi};
    case VerticalWindow::full: {
      const double top = psi_inv(beta);
      return {1e-6 * std::min(1.0, top), top};
    }
    case VerticalWindow::close: {
      const double top = std::min(kPi, psi_inv(beta));
      return {1e-6 * std::min(1.0, top), top};
    }
    case VerticalWindow::reduced: {
      if (close_regime) {
        const double t0 = x_crit_inv(beta);
        const double tau = (0.5 * t0 + 1.0) * (0.5 * t0 + 1.0);
        return {delta_of(beta, tau), t0};
      }
      const double z =
          std::sqrt(2.0 * kPi * beta + 8.0 - 4.0 * std::sqrt(2.0 * kPi * beta + 4.0 - kPi * kPi));
      const double tau = (0.5 * z + 1.0) * (0.5 * z + 1.0);
      return {delta_of(beta, tau), kPi};
    }
    case VerticalWindow::relaxed:
      if (close_regime) {
        return {delta_of(beta, (beta + 1.0) * (beta + 1.0)), 2.0 * beta};
      }
      return {delta_of(beta, 5.0 * beta), kPi};
  }
  throw DomainError("vertical_window: unknown window");
}

DistanceSolution dist_to_vertical_line(double beta, VerticalWindow window,
                                       const MinimizeOptions& options) {
  const Bracket b = vertical_window(beta, window);
  const MinimizeResult r =
      minimize_on_interval([beta](double t) { return lambda_big(beta, t); }, b, options);
  const double s = std::max(0.0, detail::level_root(beta, r.argmin,
                                                    r.argmin < detail::kSeriesThreshold));
  return finish(r.value, r.argmin, {beta, s * s}, Branch::vertical_kp, r.report);
}

DistanceSolution dist_to_tangent_line(double theta) {
  if (!std::isfinite(theta) || !(theta > 0.0 && theta < kPi)) {
    throw DomainError("dist_to_tangent_line: theta must lie in (0, pi)");
  }
  DistanceSolution sol = finish(0.5 * theta * theta, theta, critical_point(theta),
                                Branch::tangent_exact, {});
  sol.value = theta;
  return sol;
}

double dist_to_line_correlated(const CorrelationFrame& frame, ManifoldPoint p0, double beta,
                               double gamma) {
  const CorrelationFrame f = CorrelationFrame::make(frame.c, frame.rho);
  require_line(beta, gamma, "dist_to_line_correlated");
  if (!std::isfinite(p0.x) || !std::isfinite(p0.v) || !(p0.v > 0.0)) {
    throw DomainError("dist_to_line_correlated: p0 must be finite with v0 > 0");
  }
  const double rb = f.rho_bar();
  const double xi = (f.c * beta - f.c * p0.x + f.rho * p0.v) / (p0.v * rb);
  const double eta = (f.c * gamma - f.rho) / rb;
  return std::sqrt(p0.v) / f.c * dist_to_line(xi, eta).value;
}

std::vector<DistanceSolution> dist_to_lines(std::span<const LineParams> lines, Execution exec) {
  std::vector<DistanceSolution> out(lines.size());
  for_each_index(lines.size(), exec,
                 [&](std::size_t i) { out[i] = dist_to_line(lines[i].beta, lines[i].gamma); });
  return out;
}

}  // namespace hestondist

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hestondist/core_functions.hpp"
#include "hestondist/line_distance.hpp"
#include "hestondist/point_metric.hpp"

namespace hestondist {

OracleResult oracle_minimize(const std::function<double(double)>& fn,
                             const std::function<double(double)>& lower_bound,
                             const OracleOptions& options) {
  if (options.grid < 3 || !(options.v_start > 0.0)) {
    throw DomainError("oracle_minimize: need at least 3 grid nodes and a positive horizon");
  }
  const std::size_t n = options.grid;
  double horizon = options.v_start;
  std::vector<double> xs(n);
  std::vector<double> ys;
  std::size_t best = 0;
  for (int doubling = 0;; ++doubling) {
    const double h = horizon / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = h * static_cast<double>(i);
    }
    xs[n - 1] = horizon;
    ys = evaluate_grid(xs, options.exec, fn);
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(ys[i])) {
        throw NonFiniteSampleError(i, xs[i], "oracle_minimize: non-finite objective at v = " +
                                                 std::to_string(xs[i]));
      }
    }
    best = static_cast<std::size_t>(
        std::distance(ys.begin(), std::min_element(ys.begin(), ys.end())));
    if ((best + 1 < n && lower_bound(horizon) > ys[best]) || doubling >= options.max_doublings) {
      break;
    }
    horizon *= 2.0;
  }

  const std::size_t left = best == 0 ? 0 : best - 1;
  const std::size_t right = std::min(best + 1, n - 1);
  const double tol = options.tol * std::max(1.0, horizon);
  const MinimizeResult refined = golden_section(fn, {xs[left], xs[right]}, tol, 400);

  OracleResult out;
  out.v_max = horizon;
  if (refined.value < ys[best]) {
    out.argmin = refined.argmin;
    out.value = refined.value;
  } else {
    out.argmin = xs[best];
    out.value = ys[best];
  }
  out.report = {out.argmin, refined.report.iterations, refined.report.residual,
                SolveMethod::grid_refine};
  return out;
}

DistanceSolution oracle_dist(double beta, double gamma, const OracleOptions& options) {
  if (!std::isfinite(beta) || !std::isfinite(gamma)) {
    throw DomainError("oracle_dist: beta and gamma must be finite");
  }
  const ManifoldPoint base{0.0, 1.0};
  auto on_line = [beta, gamma](double v) { return ManifoldPoint{beta + gamma * v, v}; };
  const OracleResult r = oracle_minimize(
      [&](double v) { return dist(base, on_line(v)); },
      [&](double v) { return t_bound(base, on_line(v)); }, options);

  DistanceSolution sol;
  sol.value = r.value;
  sol.half_squared = 0.5 * r.value * r.value;
  sol.argmin = on_line(r.argmin);
  sol.theta_at_argmin = delta_of(sol.argmin.x, sol.argmin.v);
  sol.branch = Branch::oracle;
  sol.report = r.report;
  return sol;
}

}  // namespace hestondist

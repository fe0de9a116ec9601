#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hestondist/distance_solution.hpp"
#include "hestondist/parallel.hpp"
#include "hestondist/scalar_solvers.hpp"
#include "hestondist/types.hpp"

namespace hestondist {

/// A range of level-set angles theta for which the line meets the level set,
/// with the intersection branches that exist there.
struct AdmissibleInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;
  bool branch_plus = false;
  bool branch_minus = false;
};

/// Angles theta whose level sets meet the line x = beta + gamma v. beta >= 0.
std::vector<AdmissibleInterval> admissible_intervals(double beta, double gamma);

/// Distance from (0, 1) to the line x = beta + gamma v, v >= 0.
DistanceSolution dist_to_line(double beta, double gamma, const MinimizeOptions& options = {});

/// Minimization windows for the vertical line x = beta, beta > 0.
enum class VerticalWindow {
  /// [beta/11, 2 beta] or [1/7, pi]
  standard,
  /// (0, psi^{-1}(beta)]: every level set that meets the line
  full,
  /// (0, min(pi, psi^{-1}(beta))]: close points only
  close,
  /// shortest windows, built from the nearest point of the level sets
  reduced,
  /// [delta(beta, (beta+1)^2), 2 beta] or [delta(beta, 5 beta), pi]
  relaxed,
};

/// Angle window used for the vertical line x = beta.
Bracket vertical_window(double beta, VerticalWindow window);

/// Distance to the vertical line x = beta > 0, minimizing over one window.
DistanceSolution dist_to_vertical_line(double beta, VerticalWindow window,
                                       const MinimizeOptions& options = {});

/// The line tangent to the level set of theta at its nearest point; the
/// distance is theta. 0 < theta < pi.
DistanceSolution dist_to_tangent_line(double theta);

/// Distance in the correlated model from p0 (v0 > 0) to x = beta + gamma v.
double dist_to_line_correlated(const CorrelationFrame& frame, ManifoldPoint p0, double beta,
                               double gamma);

/// dist_to_line over many lines; output order is input order.
std::vector<DistanceSolution> dist_to_lines(std::span<const LineParams> lines,
                                            Execution exec = Execution::parallel);

struct OracleOptions {
  std::size_t grid = 4096;
  double v_start = 16.0;
  int max_doublings = 20;
  double tol = 1e-12;
  Execution exec = Execution::parallel;
};

struct OracleResult {
  double argmin = 0.0;
  double value = 0.0;
  double v_max = 0.0;
  SolveReport report;
};

/// Minimizes fn over v >= 0 on a uniform grid of [0, V]. V doubles until
/// lower_bound(V) exceeds the best grid value and the best node is interior,
/// then the best cell pair is refined by golden section.
OracleResult oracle_minimize(const std::function<double(double)>& fn,
                             const std::function<double(double)>& lower_bound,
                             const OracleOptions& options = {});

/// Brute-force distance to the line: direct minimization of the point
/// distance along it.
DistanceSolution oracle_dist(double beta, double gamma, const OracleOptions& options = {});

}  // namespace hestondist

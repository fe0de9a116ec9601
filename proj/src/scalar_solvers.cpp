#include "hestondist/scalar_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

namespace hestondist {
namespace {

constexpr double kInvPhi = 0.6180339887498948482;

void check_bracket(Bracket b, const char* fn) {
  if (!std::isfinite(b.lo) || !std::isfinite(b.hi) || !(b.lo <= b.hi)) {
    throw DomainError(std::string(fn) + ": invalid bracket [" + std::to_string(b.lo) + ", " +
                      std::to_string(b.hi) + "]");
  }
}

double sample(const ScalarFn& fn, double x, std::size_t node) {
  const double y = fn(x);
  if (!std::isfinite(y)) {
    throw NonFiniteSampleError(node, x,
                               "non-finite objective at node " + std::to_string(node) +
                                   " (x = " + std::to_string(x) + ")");
  }
  return y;
}

}  // namespace

std::string_view to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::bisection_hybrid:
      return "bisection-hybrid";
    case SolveMethod::golden_section:
      return "golden-section";
    case SolveMethod::grid_refine:
      return "grid-refine";
  }
  return "unknown";
}

SolveReport solve_monotone(const ScalarFn& fn, Bracket bracket, double target,
                           const RootOptions& options) {
  check_bracket(bracket, "solve_monotone");
  auto g = [&](double x) { return fn(x) - target; };
  const double glo = g(bracket.lo);
  const double ghi = g(bracket.hi);
  if (!std::isfinite(glo) || !std::isfinite(ghi)) {
    throw DomainError("solve_monotone: non-finite value at a bracket end");
  }
  if (glo == 0.0) {
    return {bracket.lo, 0, 0.0, SolveMethod::bisection_hybrid};
  }
  if (ghi == 0.0) {
    return {bracket.hi, 0, 0.0, SolveMethod::bisection_hybrid};
  }
  if ((glo > 0.0) == (ghi > 0.0)) {
    throw NoSignChangeError(bracket.lo, bracket.hi,
                            "solve_monotone: target not bracketed by [" +
                                std::to_string(bracket.lo) + ", " + std::to_string(bracket.hi) +
                                "]");
  }

  const double abs_tol = options.tol;
  const double rel_tol = options.rel_tol;
  auto done = [abs_tol, rel_tol](double a, double b) {
    const double width = std::abs(b - a);
    return width <= abs_tol || width <= rel_tol * std::min(std::abs(a), std::abs(b));
  };
  std::uintmax_t iters = static_cast<std::uintmax_t>(std::max(1, options.max_iterations));
  const std::uintmax_t budget = iters;
  const auto [a, b] =
      boost::math::tools::toms748_solve(g, bracket.lo, bracket.hi, glo, ghi, done, iters);
  const double ga = std::abs(g(a));
  const double gb = std::abs(g(b));
  const double root = ga <= gb ? a : b;
  if (iters >= budget && !done(a, b) && std::min(ga, gb) != 0.0) {
    throw MaxIterationsError(a, b, "solve_monotone: iteration budget exhausted");
  }
  return {root, static_cast<int>(iters), std::min(ga, gb), SolveMethod::bisection_hybrid};
}

MinimizeResult golden_section(const ScalarFn& fn, Bracket bracket, double tol,
                              int max_iterations) {
  check_bracket(bracket, "golden_section");
  double a = bracket.lo;
  double b = bracket.hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = sample(fn, c, 0);
  double fd = sample(fn, d, 1);
  int it = 0;
  while (b - a > tol) {
    if (it++ >= max_iterations) {
      throw MaxIterationsError(a, b, "golden_section: iteration budget exhausted");
    }
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = sample(fn, c, static_cast<std::size_t>(it) + 1);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = sample(fn, d, static_cast<std::size_t>(it) + 1);
    }
  }
  MinimizeResult r;
  r.argmin = fc <= fd ? c : d;
  r.value = std::min(fc, fd);
  r.report = {r.argmin, it, b - a, SolveMethod::golden_section};
  return r;
}

MinimizeResult minimize_on_interval(const ScalarFn& fn, Bracket bracket,
                                    const MinimizeOptions& options) {
  check_bracket(bracket, "minimize_on_interval");
  const double lo = bracket.lo;
  const double hi = bracket.hi;
  if (lo == hi) {
    const double y = sample(fn, lo, 0);
    return {lo, y, {lo, 0, 0.0, SolveMethod::grid_refine}};
  }

  const std::size_t n = std::max<std::size_t>(options.scan_nodes, 3);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  std::vector<double> xs(n);
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = i + 1 == n ? hi : lo + h * static_cast<double>(i);
    ys[i] = sample(fn, xs[i], i);
  }
  const auto best = static_cast<std::size_t>(
      std::distance(ys.begin(), std::min_element(ys.begin(), ys.end())));

  MinimizeResult out{xs[best], ys[best], {xs[best], 0, h, SolveMethod::grid_refine}};
  const double mid = 0.5 * (lo + hi);
  const double fmid = sample(fn, mid, n);
  if (fmid < out.value) {
    out.argmin = mid;
    out.value = fmid;
  }

  const std::size_t left = best == 0 ? 0 : best - 1;
  const std::size_t right = best + 1 == n ? n - 1 : best + 1;
  const MinimizeResult refined =
      golden_section(fn, {xs[left], xs[right]}, options.tol, options.max_iterations);
  out.report.iterations = refined.report.iterations;
  if (refined.value < out.value) {
    out.argmin = refined.argmin;
    out.value = refined.value;
    out.report.residual = refined.report.residual;
  }
  out.report.value = out.argmin;
  return out;
}

}  // namespace hestondist

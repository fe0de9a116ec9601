#include "hestondist/level_sets.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hestondist/core_functions.hpp"
#include "hestondist/detail/trig_kernels.hpp"
#include "hestondist/inverse_functions.hpp"

namespace hestondist {
namespace {

using namespace detail;

struct LevelTerms {
  double tms;
  double k;
  double omc;
  double n;   // k^2 + tms * omc * (x - psi)
  double dx;  // x - psi
};

LevelTerms level_terms(double theta, double x, const char* fn) {
  if (!std::isfinite(theta) || !(theta > 0.0 && theta < kTwoPi)) {
    throw DomainError(std::string(fn) + ": theta must lie in (0, 2pi)");
  }
  if (!std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": x must be finite");
  }
  const double p = psi_ext(theta);
  if (x < p) {
    throw DomainError(std::string(fn) + ": x = " + std::to_string(x) +
                      " lies left of psi(theta) = " + std::to_string(p));
  }
  LevelTerms t{theta_minus_sin(theta), chord_defect(theta), one_minus_cos(theta), 0.0, x - p};
  t.n = t.k * t.k + t.tms * t.omc * t.dx;
  return t;
}

}  // namespace

double curve_v(double theta, double x, CurveForm form) {
  if (theta == 0.0 || !std::isfinite(theta) || !(std::abs(theta) < kTwoPi)) {
    throw DomainError("curve_v: requires 0 < |theta| < 2pi");
  }
  const double t = std::abs(theta);
  const LevelTerms lt = level_terms(t, x, "curve_v");
  if (form == CurveForm::affine_split) {
    const double r = lt.k / lt.tms;
    const double v1 = lt.omc / lt.tms * x + 2.0 * r * r - 1.0;
    const double radicand = 2.0 * lt.tms * x + 2.0 * lt.omc - t * t;
    const double v2 =
        2.0 * std::sin(0.5 * t) * lt.k / (lt.tms * lt.tms) * std::sqrt(std::max(0.0, radicand));
    return v1 - v2;
  }
  const double s = lt.omc * lt.dx / (lt.k + std::sqrt(lt.n));
  return s * s;
}

double curve_slope(double theta, double x) {
  const LevelTerms lt = level_terms(theta, x, "curve_slope");
  const double rn = std::sqrt(lt.n);
  // (1 - cos)/(theta - sin) * (1 - k / sqrt N), with sqrt N - k rationalized.
  return lt.omc * lt.omc * lt.dx / (rn * (rn + lt.k));
}

double curve_curvature(double theta, double x) {
  const LevelTerms lt = level_terms(theta, x, "curve_curvature");
  return lt.k * lt.omc * lt.omc / (2.0 * lt.n * std::sqrt(lt.n));
}

std::vector<LevelCurveSample> sample_level_curve(double theta, double x_max, std::size_t samples) {
  if (!std::isfinite(theta) || !(theta > 0.0 && theta < kTwoPi)) {
    throw DomainError("sample_level_curve: theta must lie in (0, 2pi)");
  }
  const double x0 = psi(theta);
  if (!std::isfinite(x_max) || x_max < x0) {
    throw DomainError("sample_level_curve: x_max must be at least psi(theta) = " +
                      std::to_string(x0));
  }
  if (samples == 0) {
    throw DomainError("sample_level_curve: samples must be positive");
  }
  std::vector<LevelCurveSample> out;
  out.reserve(samples);
  const double h = samples > 1 ? (x_max - x0) / static_cast<double>(samples - 1) : 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = i + 1 == samples && samples > 1 ? x_max : x0 + h * static_cast<double>(i);
    out.push_back({theta, x, curve_v(theta, x), curve_slope(theta, x), curve_curvature(theta, x)});
  }
  return out;
}

DistanceSolution dist_to_level_set(double theta) {
  if (!std::isfinite(theta) || !(std::abs(theta) < kTwoPi)) {
    throw DomainError("dist_to_level_set: requires |theta| < 2pi");
  }
  DistanceSolution sol;
  sol.branch = Branch::level_set;
  sol.theta_at_argmin = theta;
  sol.report.method = SolveMethod::grid_refine;
  if (theta == 0.0) {
    sol.argmin = {0.0, 1.0};
    return sol;
  }
  const double t = std::abs(theta);
  const double sign = theta < 0.0 ? -1.0 : 1.0;
  if (t < kPi) {
    const double c = std::cos(0.5 * t);
    sol.value = t;
    sol.argmin = {sign * x_crit(t), c * c};
  } else {
    sol.value = t / std::sin(0.5 * t);
    sol.argmin = {sign * psi(t), 0.0};
  }
  sol.half_squared = 0.5 * sol.value * sol.value;
  sol.report.value = sol.argmin.x;
  return sol;
}

double dist_to_horizontal(double tau) {
  if (!std::isfinite(tau) || tau < 0.0) {
    throw DomainError("dist_to_horizontal: tau must be nonnegative");
  }
  return 2.0 * std::abs(std::sqrt(tau) - 1.0);
}

ManifoldPoint critical_point(double theta) {
  const double x = x_crit(theta);
  const double c = std::cos(0.5 * theta);
  return {x, c * c};
}

double theta_crit(LineParams line) {
  if (!std::isfinite(line.beta) || !std::isfinite(line.gamma) || line.beta < 0.0 ||
      line.gamma < 0.0) {
    throw DomainError("theta_crit: requires beta >= 0 and gamma >= 0");
  }
  if (line.beta <= kHalfPi) {
    return zeta_inv(line.gamma, line.beta);
  }
  return psi_inv(line.beta);
}

}  // namespace hestondist

#include "hestondist/detail/trig_kernels.hpp"

#include <cmath>
#include <limits>

namespace hestondist::detail {
namespace {

// Below this magnitude theta - sin(theta) and the chord defect are summed from
// their Maclaurin series; 14 terms reach full double precision at |theta| = 1.
constexpr double kPrimitiveSeriesCut = 1.0;
constexpr int kPrimitiveTerms = 14;

struct Primitives {
  double tms;  // theta - sin theta
  double k;    // 2 sin(theta/2) - theta cos(theta/2)
  double omc;  // 1 - cos theta
  double psi;
};

Primitives primitives(double theta, bool series) {
  if (series) {
    const double t2 = theta * theta;
    const double t3 = t2 * theta;
    return {t3 * (1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0),
            t3 * (1.0 / 12.0 - t2 / 480.0 + t2 * t2 / 53760.0),
            t2 * (0.5 - t2 / 24.0 + t2 * t2 / 720.0), psi_series(theta)};
  }
  return {theta_minus_sin(theta), chord_defect(theta), one_minus_cos(theta),
          psi_closed(theta)};
}

double level_half_squared(double s, double theta, double sq_over_omc) {
  const double q = std::sin(0.25 * theta);
  const double d = s - 1.0;
  return sq_over_omc * (d * d + 4.0 * s * q * q);
}

}  // namespace

double theta_minus_sin(double theta) {
  if (std::abs(theta) >= kPrimitiveSeriesCut) {
    return theta - std::sin(theta);
  }
  const double t2 = theta * theta;
  double term = theta * t2 / 6.0;
  double sum = 0.0;
  for (int n = 1; n <= kPrimitiveTerms; ++n) {
    sum += term;
    term *= -t2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
  }
  return sum;
}

double chord_defect(double theta) {
  if (std::abs(theta) >= kPrimitiveSeriesCut) {
    return 2.0 * std::sin(0.5 * theta) - theta * std::cos(0.5 * theta);
  }
  // 2 sin u - 2u cos u = sum_{n>=1} (-1)^(n+1) 4n u^(2n+1) / (2n+1)!, u = theta/2
  const double u = 0.5 * theta;
  const double u2 = u * u;
  double p = u * u2 / 6.0;
  double sum = 0.0;
  for (int n = 1; n <= kPrimitiveTerms; ++n) {
    sum += 4.0 * n * p;
    p *= -u2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
  }
  return sum;
}

double one_minus_cos(double theta) {
  const double s = std::sin(0.5 * theta);
  return 2.0 * s * s;
}

double psi_closed(double theta) { return theta_minus_sin(theta) / one_minus_cos(theta); }

double psi_series(double theta) {
  const double t2 = theta * theta;
  return theta * (1.0 / 3.0 + t2 / 90.0 + t2 * t2 / 2520.0);
}

double psi_ext(double theta) {
  return std::abs(theta) < kSeriesThreshold ? psi_series(theta) : psi_closed(theta);
}

double coef_A_closed(double theta) { return -chord_defect(theta) / theta_minus_sin(theta); }

double coef_A_series(double theta) {
  const double t2 = theta * theta;
  return -0.5 - t2 / 80.0 - 19.0 * t2 * t2 / 134400.0;
}

double coef_A_ext(double theta) {
  return std::abs(theta) < kSeriesThreshold ? coef_A_series(theta) : coef_A_closed(theta);
}

double sq_over_omc_closed(double theta) { return theta * theta / one_minus_cos(theta); }

double sq_over_omc_series(double theta) {
  const double t2 = theta * theta;
  return 2.0 + t2 / 6.0 + t2 * t2 / 120.0;
}

double sq_over_omc_ext(double theta) {
  return std::abs(theta) < kSeriesThreshold ? sq_over_omc_series(theta)
                                            : sq_over_omc_closed(theta);
}

double omega(double delta) {
  // 1 + cos(delta/2) = 2 cos^2(delta/4), no cancellation near delta = 2pi.
  const double c = std::cos(0.25 * delta);
  return (delta + 2.0 * std::sin(0.5 * delta)) / (2.0 * c * c);
}

double f_closed(double v, double delta) {
  const double rv = std::sqrt(v);
  const double d = rv - 1.0;
  return d * d * psi_closed(delta) + rv * omega(delta);
}

double f_series(double v, double delta) {
  const double rv = std::sqrt(v);
  const double d = rv - 1.0;
  return d * d * psi_series(delta) + rv * omega(delta);
}

double level_root(double x, double theta, bool series) {
  const Primitives p = primitives(theta, series);
  const double dx = x - p.psi;
  const double n = p.k * p.k + p.tms * p.omc * dx;
  if (n < 0.0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  // (-k + sqrt N) / (theta - sin theta), rationalized.
  return p.omc * dx / (p.k + std::sqrt(n));
}

double half_squared_on_level(double s, double theta) {
  return level_half_squared(s, theta, sq_over_omc_ext(theta));
}

double lambda_closed(double x, double theta) {
  return level_half_squared(level_root(x, theta, false), theta, sq_over_omc_closed(theta));
}

double lambda_series(double x, double theta) {
  return level_half_squared(level_root(x, theta, true), theta, sq_over_omc_series(theta));
}

}  // namespace hestondist::detail

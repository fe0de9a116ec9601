#include "hestondist/vol_smile.hpp"

#include <cmath>

#include "hestondist/line_distance.hpp"

namespace hestondist {

SmilePoint iv_limit(const SmileQuery& q) {
  const CorrelationFrame f = CorrelationFrame::make(q.frame.c, q.frame.rho);
  if (!(q.spot > 0.0) || !(q.strike > 0.0) || !(q.v0 > 0.0) || !std::isfinite(q.spot) ||
      !std::isfinite(q.strike) || !std::isfinite(q.v0)) {
    throw DomainError("iv_limit: spot, strike and v0 must be positive and finite");
  }
  if (q.strike == q.spot) {
    throw AtTheMoneyError("iv_limit: strike equals spot");
  }
  const double m = std::log(q.strike / q.spot);
  const double rb = f.rho_bar();
  SmilePoint p;
  p.strike = q.strike;
  p.log_moneyness = m;
  p.line_beta = f.c * m / (q.v0 * rb) + f.rho / rb;
  p.line_gamma = (0.0 - f.rho) / rb;
  p.distance = dist_to_line(p.line_beta, p.line_gamma).value;
  if (!(p.distance > 0.0)) {
    throw DegenerateError("iv_limit: reduced line passes through the base point");
  }
  p.iv_limit = f.c * std::abs(m) / (std::sqrt(q.v0) * p.distance);
  return p;
}

std::vector<SmileEntry> smile_table(const SmileQuery& base, std::span<const double> strikes,
                                    Execution exec) {
  std::vector<SmileEntry> out(strikes.size());
  for_each_index(strikes.size(), exec, [&](std::size_t i) {
    SmileEntry& e = out[i];
    e.strike = strikes[i];
    SmileQuery q = base;
    q.strike = strikes[i];
    try {
      e.point = iv_limit(q);
    } catch (const Error& err) {
      e.error_name = err.name();
      e.error_message = err.what();
    }
  });
  return out;
}

}  // namespace hestondist

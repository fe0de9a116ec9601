#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hestondist/parallel.hpp"
#include "hestondist/types.hpp"

namespace hestondist {

struct SmileQuery {
  double spot = 1.0;
  double strike = 1.0;
  double v0 = 1.0;
  CorrelationFrame frame;
};

struct SmilePoint {
  double strike = 0.0;
  /// log(K / S0)
  double log_moneyness = 0.0;
  double iv_limit = 0.0;
  double line_beta = 0.0;
  double line_gamma = 0.0;
  /// Distance from (0, 1) to the reduced line.
  double distance = 0.0;
};

/// Small-maturity limit of the implied volatility at one strike.
SmilePoint iv_limit(const SmileQuery& q);

/// One entry per strike, in input order. A failed strike carries the error
/// name and message instead of a point.
struct SmileEntry {
  double strike = 0.0;
  std::optional<SmilePoint> point;
  std::string error_name;
  std::string error_message;
};

std::vector<SmileEntry> smile_table(const SmileQuery& base, std::span<const double> strikes,
                                    Execution exec = Execution::parallel);

}  // namespace hestondist

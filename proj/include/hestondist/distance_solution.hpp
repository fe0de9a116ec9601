#pragma once

#include <string_view>

#include "hestondist/scalar_solvers.hpp"
#include "hestondist/types.hpp"

namespace hestondist {

enum class Branch {
  on_line,
  vertical_kp,
  slanted_plus,
  slanted_minus,
  left_slanted,
  tangent_exact,
  level_set,
  horizontal,
  oracle,
};

std::string_view to_string(Branch branch);

/// Distance from (0, 1) to a set, with the point where it is attained.
struct DistanceSolution {
  double value = 0.0;
  /// value^2 / 2
  double half_squared = 0.0;
  ManifoldPoint argmin;
  double theta_at_argmin = 0.0;
  Branch branch = Branch::on_line;
  SolveReport report;
};

}  // namespace hestondist

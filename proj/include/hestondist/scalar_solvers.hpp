#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

#include "hestondist/errors.hpp"

namespace hestondist {

struct Bracket {
  double lo = 0.0;
  double hi = 1.0;
};

enum class SolveMethod { bisection_hybrid, golden_section, grid_refine };

std::string_view to_string(SolveMethod method);

struct SolveReport {
  double value = 0.0;
  int iterations = 0;
  double residual = 0.0;
  SolveMethod method = SolveMethod::bisection_hybrid;
};

struct RootOptions {
  /// Absolute tolerance on the argument.
  double tol = 1e-12;
  /// Relative tolerance on the argument; the looser of the two stops the solve.
  double rel_tol = 0.0;
  int max_iterations = 200;
};

struct MinimizeOptions {
  /// Tolerance on the argument.
  double tol = 1e-9;
  std::size_t scan_nodes = 256;
  int max_iterations = 200;
};

struct MinimizeResult {
  double argmin = 0.0;
  double value = 0.0;
  SolveReport report;
};

using ScalarFn = std::function<double(double)>;

/// Root of fn(r) = target for fn monotone on the bracket. Throws
/// NoSignChangeError if the target is not bracketed and MaxIterationsError
/// (with the last bracket) when the budget runs out.
SolveReport solve_monotone(const ScalarFn& fn, Bracket bracket, double target,
                           const RootOptions& options = {});

/// Plain golden-section search on [lo, hi]; assumes unimodality.
MinimizeResult golden_section(const ScalarFn& fn, Bracket bracket, double tol = 1e-9,
                              int max_iterations = 200);

/// Uniform scan followed by golden-section refinement of the cells next to the
/// best node. Does not assume unimodality. Non-finite samples raise
/// NonFiniteSampleError.
MinimizeResult minimize_on_interval(const ScalarFn& fn, Bracket bracket,
                                    const MinimizeOptions& options = {});

}  // namespace hestondist

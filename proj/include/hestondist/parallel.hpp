#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace hestondist {

enum class Execution { serial, parallel };

/// Calls body(i) for i in [0, n). Exceptions are captured per index and the
/// one with the smallest index is rethrown, so both modes fail identically.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

/// fn evaluated at every x in xs.
template <class Fn>
std::vector<double> evaluate_grid(const std::vector<double>& xs, Execution exec, Fn&& fn) {
  std::vector<double> ys(xs.size());
  for_each_index(xs.size(), exec, [&](std::size_t i) { ys[i] = fn(xs[i]); });
  return ys;
}

}  // namespace hestondist

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hestondist {

/// Base class of every error raised by the library. `name()` is a stable,
/// machine-readable identifier that the CLI puts into its error records.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// An argument lies outside the domain of a formula.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain_error", what) {}
};

/// 1 - gamma*B(theta) vanished in a root formula that divides by it.
class DivisionDegenerateError : public Error {
 public:
  explicit DivisionDegenerateError(const std::string& what)
      : Error("division_degenerate", what) {}
};

/// Derivative formula evaluated where it has a pole.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error("pole_error", what) {}
};

class NoSignChangeError : public Error {
 public:
  NoSignChangeError(double lo, double hi, const std::string& what)
      : Error("no_sign_change", what), lo_(lo), hi_(hi) {}
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// Iteration budget exhausted; carries the best bracket found so far.
class MaxIterationsError : public Error {
 public:
  MaxIterationsError(double lo, double hi, const std::string& what)
      : Error("max_iterations", what), lo_(lo), hi_(hi) {}
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

class NonFiniteSampleError : public Error {
 public:
  NonFiniteSampleError(std::size_t node, double position, const std::string& what)
      : Error("non_finite_sample", what), node_(node), position_(position) {}
  std::size_t node() const noexcept { return node_; }
  double position() const noexcept { return position_; }

 private:
  std::size_t node_;
  double position_;
};

/// Both points on the boundary v = 0 with different abscissas.
class BoundaryPairError : public Error {
 public:
  explicit BoundaryPairError(const std::string& what) : Error("boundary_pair", what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error("convergence_failure", what) {}
};

class AtTheMoneyError : public Error {
 public:
  explicit AtTheMoneyError(const std::string& what) : Error("at_the_money", what) {}
};

/// Internal consistency failure: a quantity that must be positive was not.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what) : Error("degenerate", what) {}
};

}  // namespace hestondist

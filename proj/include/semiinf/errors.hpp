#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semiinf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (x < 0, non-finite x, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Derivative order outside 0..kMaxDerivativeOrder.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// Parameter combination the operation does not support (e.g. alpha != 1 weights).
class UnsupportedParameterError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent configuration: mismatched dimensions, invalid pairings, bad presets.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class NodeComputationError : public Error {
 public:
  using Error::Error;
};

/// Floating point overflow of a node or map.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Non-finite value produced by a user callable.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, int component = -1)
      : Error(what), component_(component) {}
  int component() const noexcept { return component_; }

 private:
  int component_;
};

/// Newton iteration hit a numerically singular Jacobian.
class SingularJacobianError : public Error {
 public:
  SingularJacobianError(const std::string& what, std::vector<double> iterate, double rcond)
      : Error(what), iterate_(std::move(iterate)), rcond_(rcond) {}
  const std::vector<double>& iterate() const noexcept { return iterate_; }
  double rcond() const noexcept { return rcond_; }

 private:
  std::vector<double> iterate_;
  double rcond_;
};

/// A collocation solve that did not converge; carries the residual history.
class SolveError : public Error {
 public:
  SolveError(const std::string& what, std::vector<double> history)
      : Error(what), history_(std::move(history)) {}
  const std::vector<double>& history() const noexcept { return history_; }

 private:
  std::vector<double> history_;
};

/// Trajectory became non-finite during integration.
class BlowUpError : public Error {
 public:
  BlowUpError(const std::string& what, double abscissa) : Error(what), abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

class OracleError : public Error {
 public:
  using Error::Error;
};

/// Malformed command line or configuration text.
class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace semiinf

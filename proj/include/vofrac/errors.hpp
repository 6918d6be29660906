#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace vofrac {

/// Argument outside the domain of an operator (t <= a, order outside (0,1), ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Gamma-family function evaluated at a non-positive integer.
class PoleError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Invalid parameters or configuration (N < n+1, missing derivatives, bad grid).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Failure of a numerical procedure: non-finite state, non-convergence.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public NumericalError {
public:
  QuadratureError(const std::string& what, double achieved_error)
      : NumericalError(describe(what, achieved_error)),
        achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

private:
  static std::string describe(const std::string& what, double err) {
    std::ostringstream os;
    os << what << " (achieved error estimate " << err << ")";
    return os.str();
  }

  double achieved_error_;
};

}  // namespace vofrac

#pragma once

#include <functional>
#include <vector>

#include "vofrac/specfun.hpp"

namespace vofrac {

/// A function x(t) on [a, b] with callable derivatives x^(0), ..., x^(m).
class SmoothFunction {
public:
  using Fn = std::function<double(double)>;

  SmoothFunction(std::vector<Fn> derivs, Interval domain);

  double operator()(double t) const { return derivs_[0](t); }

  /// x^(k)(t); throws ConfigError when k exceeds max_order().
  double derivative(int k, double t) const;

  int max_order() const { return static_cast<int>(derivs_.size()) - 1; }
  const Interval& domain() const { return domain_; }

  /// Largest mismatch between derivs[j] and a central difference of derivs[j-1].
  double derivative_mismatch(int samples = 51, double h = 1e-5) const;

  /// c1 * f + c2 * g, truncated to the common derivative order.
  friend SmoothFunction linear_combination(double c1, const SmoothFunction& f, double c2, const SmoothFunction& g);

private:
  std::vector<Fn> derivs_;
  Interval domain_;
};

/// (t - a)^gamma_exp with gamma_exp > -1.
struct PowerFunction {
  double gamma_exp;
  double a;
};

/// Value of a quadrature oracle and its achieved absolute error estimate.
struct OracleResult {
  double value;
  double error;
};

constexpr double kDefaultOracleTol = 1e-8;

// Closed forms for power functions.
double power_left_integral(const PowerFunction& p, const OrderFunction& ord, double t);
double power_left_marchaud(const PowerFunction& p, const OrderFunction& ord, double t);
double power_left_rl_derivative(const PowerFunction& p, const OrderFunction& ord, double t);

// Quadrature oracles. The left operators need a < t <= b, the right ones a <= t < b.
OracleResult oracle_left_integral(const SmoothFunction& x, const OrderFunction& ord, double t,
                                  double tol = kDefaultOracleTol);
OracleResult oracle_right_integral(const SmoothFunction& x, const OrderFunction& ord, double t,
                                   double tol = kDefaultOracleTol);

/// Left Riemann-Liouville derivative as the difference of the x'-kernel integral (plus the
/// boundary term) and the alpha'-weighted logarithmic-kernel integral.
OracleResult oracle_left_rl_derivative(const SmoothFunction& x, const OrderFunction& ord, double t,
                                       double tol = kDefaultOracleTol);

/// Left Marchaud derivative in integrated-by-parts form. The result is cross-checked against
/// the difference-quotient form and a NumericalError is thrown if they disagree by more
/// than 10 * tol.
OracleResult oracle_left_marchaud(const SmoothFunction& x, const OrderFunction& ord, double t,
                                  double tol = kDefaultOracleTol);

/// Left Marchaud derivative in difference-quotient form.
OracleResult oracle_left_marchaud_difference(const SmoothFunction& x, const OrderFunction& ord, double t);

/// Right Riemann-Liouville derivative, through the reflection tau -> a + b - tau onto the
/// left derivative of the reflected function with the reflected order.
OracleResult oracle_right_rl_derivative(const SmoothFunction& x, const OrderFunction& ord, double t,
                                        double tol = kDefaultOracleTol);

/// x(a + b - t) with derivatives (-1)^k x^(k)(a + b - t).
SmoothFunction reflect(const SmoothFunction& x);

/// alpha(a + b - t) with derivative -alpha'(a + b - t).
OrderFunction reflect(const OrderFunction& ord);

OracleResult oracle_right_marchaud(const SmoothFunction& x, const OrderFunction& ord, double t,
                                   double tol = kDefaultOracleTol);

}  // namespace vofrac

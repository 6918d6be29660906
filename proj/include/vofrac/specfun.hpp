#pragma once

#include <functional>
#include <span>

namespace vofrac {

/// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLog {
  double log_abs;
  int sign;
};

/// Gamma function. Lanczos approximation, reflection for x < 1/2.
/// Throws PoleError at non-positive integers.
double gamma(double x);

/// log|Gamma(x)| with sign; valid for negative non-integer x.
SignedLog log_gamma_signed(double x);

/// log(Gamma(x) / Gamma(y)) for x, y >= 1/2, accurate when x and y are large and close.
double log_gamma_ratio(double x, double y);

/// Digamma psi(x) = Gamma'(x)/Gamma(x). Throws PoleError at non-positive integers.
double digamma(double x);

/// Signed binomial coefficient (-alpha choose k)(-1)^k = Gamma(alpha+k) / (Gamma(alpha) k!).
double binom_signed(double alpha, int k);

/// sin(pi x) with exact zeros at integers.
double sin_pi(double x);

/// Closed interval [a, b].
struct Interval {
  double a;
  double b;

  double length() const { return b - a; }
  bool contains(double t) const { return a <= t && t <= b; }
};

/// Variable fractional order alpha(t) on [a, b] with values in (0, 1), together with
/// its first derivative.
class OrderFunction {
public:
  using Fn = std::function<double(double)>;

  /// Order with a closed-form derivative.
  static OrderFunction with_derivative(Fn alpha, Fn dalpha, Interval domain);

  /// Order given by values only; the derivative is a central difference with step 1e-6.
  static OrderFunction from_values(Fn alpha, Interval domain);

  /// Constant order; derivative is exactly zero.
  static OrderFunction constant(double alpha, Interval domain);

  double operator()(double t) const { return eval_(t); }
  double deriv(double t) const { return deriv_(t); }
  const Interval& domain() const { return domain_; }
  bool is_constant() const { return constant_; }

  /// Checks 0 < alpha(t) < 1 on `samples` equispaced points of the domain.
  /// Throws DomainError naming the first offending t.
  void validate(int samples = 1001) const;

  /// Largest |deriv(t) - central difference| over interior sample points.
  double derivative_mismatch(int samples = 101, double h = 1e-6) const;

  /// Order alpha(t) + beta for a constant beta.
  OrderFunction shifted(double beta) const;

private:
  OrderFunction(Fn alpha, Fn dalpha, Interval domain, bool constant)
      : eval_(std::move(alpha)), deriv_(std::move(dalpha)), domain_(domain), constant_(constant) {}

  Fn eval_;
  Fn deriv_;
  Interval domain_;
  bool constant_;
};

}  // namespace vofrac

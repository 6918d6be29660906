#pragma once

// Approximation of variable-order fractional operators by finite sums of integer-order
// derivatives x^(k)(t) and moments V_k(t) (left) / W_k(t) (right), with a-priori bounds on
// the truncation error.
//
// Notation: n is the highest derivative used, N >= n + 1 the truncation size. Left operators
// use d = t - a, right operators d = b - t.

#include <vector>

#include "vofrac/reference.hpp"
#include "vofrac/specfun.hpp"

namespace vofrac {

struct ExpansionParams {
  int n;
  int N;

  /// Throws ConfigError unless n >= 0 and N >= n + 1.
  void validate() const;
};

enum class Side { left, right };

/// Moments of x for k = n+1 ... k_max at time t.
///   left:  V_k(t) = (k - n) * int_a^t (tau - a)^(k-n-1) x(tau) dtau
///   right: W_k(t) = (k - n) * int_t^b (b - tau)^(k-n-1) x(tau) dtau
struct MomentVector {
  Side side;
  int n;
  double t;
  std::vector<double> values;  // values[k - n - 1]

  int k_min() const { return n + 1; }
  int k_max() const { return n + static_cast<int>(values.size()); }
  double operator[](int k) const;
};

/// Approximate operator value with the pieces it was assembled from.
///   left RL derivative:  value = s1 - s2, |error| <= bound_e1 + bound_e2
///   right RL derivative: value = s1 + s2, |error| <= bound_e1 + bound_e2
///   Marchaud, integral:  value = s1, s2 = 0, bound_e2 = 0 (bound_e1 holds E_N for the integral)
struct ApproxReport {
  double value = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double bound_e1 = 0.0;
  double bound_e2 = 0.0;

  double bound() const { return bound_e1 + bound_e2; }
};

MomentVector moments_left(const SmoothFunction& x, double a, double t, int n, int k_max);
MomentVector moments_right(const SmoothFunction& x, double b, double t, int n, int k_max);

// Expansion coefficients, k = 0..n for A and k >= n+1 for B.
double coeff_A_deriv_left(double alpha, int k, const ExpansionParams& params);
double coeff_B_deriv_left(double alpha, int k, int n);
double coeff_A_right(double alpha, int k, const ExpansionParams& params);
double coeff_B_right(double alpha, int k, const ExpansionParams& params);
double coeff_A_integral(double alpha, int k, const ExpansionParams& params);
double coeff_B_integral(double alpha, int k, const ExpansionParams& params);

// Partial sums. Moments must cover k = n+1..N for s1 and k = n+1..2N+n+1 for s2.
double s1_left(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t,
               const MomentVector& moments);
double s2_left(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t,
               const MomentVector& moments);
double s1_right(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t,
                const MomentVector& moments);
double s2_right(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t,
                const MomentVector& moments);

ApproxReport approx_left_rl_derivative(const SmoothFunction& x, const OrderFunction& ord,
                                       const ExpansionParams& params, double t);
ApproxReport approx_right_rl_derivative(const SmoothFunction& x, const OrderFunction& ord,
                                        const ExpansionParams& params, double t);
ApproxReport approx_left_integral(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params,
                                  double t);
ApproxReport approx_left_marchaud(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params,
                                  double t);
ApproxReport approx_right_marchaud(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params,
                                   double t);

/// max |x^(j)| over [a, t] (left) or [t, b] (right), sampled at `samples` equispaced points.
/// This is a lower estimate of the true maximum; raise `samples` to refine it.
double sup_derivative(const SmoothFunction& x, int j, double t, Side side, int samples = 1001);

/// Bound on E_{1,N}. Returns +infinity when n <= alpha(t), where the bound does not decay.
double bound_e1(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t, Side side);

/// Bound on E_{2,N}. Zero for constant order; grows without limit as d -> 0 through |ln d|.
double bound_e2(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t, Side side);

/// Bound on E_N for the left integral expansion.
double bound_en_integral(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t);

}  // namespace vofrac

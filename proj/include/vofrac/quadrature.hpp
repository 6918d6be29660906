#pragma once

#include <functional>
#include <span>

namespace vofrac::quad {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // achieved absolute error estimate
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (15/31) quadrature with an absolute error target.
/// Throws QuadratureError when `abs_tol` cannot be met with panels no finer than 2^-max_depth of the interval.
QuadResult integrate(const Integrand& f, double lo, double hi, double abs_tol, int max_depth = 40);

enum class SingularEnd { lower, upper };

/// Quadrature for integrands with a logarithmic or weak algebraic singularity at one end.
/// The interval is split geometrically toward the singular end (panel widths halve,
/// `levels` panels plus a final remainder panel); each panel uses a 10/21-point
/// Gauss-Kronrod pair. The singular endpoint itself is never evaluated. With
/// `remainder == false` the final panel of width (hi - lo) * 2^-levels is left out so the
/// caller can add an analytic tail.
QuadResult integrate_graded(const Integrand& f, double lo, double hi, SingularEnd end, int levels = 40,
                            bool remainder = true);

/// Composite Simpson rule on uniformly spaced samples. An odd number of intervals is
/// closed with the Simpson 3/8 rule on the last three intervals.
double simpson(std::span<const double> values, double h);

/// Composite Simpson rule on arbitrary abscissae (pairwise parabolic fits).
double simpson(std::span<const double> t, std::span<const double> values);

}  // namespace vofrac::quad

#pragma once

// Linear variable-order fractional differential equations
//
//   D^alpha(t) x(t) + c x(t) = g(t),   x(a) = x0,
//
// with D the left Marchaud derivative, reduced to an ODE system in (x, V_2, ..., V_N) by the
// n = 1 expansion of the derivative.

#include <functional>
#include <vector>

#include "vofrac/integrator.hpp"
#include "vofrac/specfun.hpp"

namespace vofrac {

/// n = 1 expansion coefficients: A multiplies x, B multiplies x', C[k-2] multiplies V_k.
struct FdeCoefficients {
  double A;
  double B;
  std::vector<double> C;  // k = 2..N

  double C_at(int k) const { return C[static_cast<std::size_t>(k - 2)]; }
};

FdeCoefficients fde_coefficients(double alpha, int N);

struct LinearFdeProblem {
  OrderFunction ord;
  std::function<double(double)> source;
  double linear_coeff = 1.0;
  double a = 0.0;
  double x0 = 0.0;
  double horizon = 1.0;
};

/// State layout: [x, V_2, ..., V_N].
struct ReducedOdeSystem {
  int N;
  double a;
  double horizon;
  double x0;
  OdeRhs rhs;

  int state_dim() const { return N; }
};

ReducedOdeSystem reduce(const LinearFdeProblem& problem, int N);

/// RK4 from a + start_eps with state (x0, 0, ..., 0) up to the horizon.
Trajectory solve_ivp(const ReducedOdeSystem& system, double start_eps = 1e-6, double step = 1e-3,
                     double graded_ratio = Rk4Options{}.graded_ratio);

}  // namespace vofrac

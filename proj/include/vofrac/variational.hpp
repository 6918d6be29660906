#pragma once

// Tracking problem
//
//   minimize  int_a^b [D^alpha(t) x(t) - g(t)]^2 dt,   x(a) = x_a, x(b) = x_b,
//
// with D the left Marchaud derivative. The derivative is replaced by its n = 1 expansion,
// which turns the problem into an optimal control problem with control
// u = A s^-alpha x + B s^(1-alpha) x' + sum_k C_k s^(1-k-alpha) V_k (s = t - a). The
// Pontryagin conditions give a linear two-point boundary value problem in
// (x, V_2..V_N, lambda_1..lambda_N), solved here by shooting.

#include <functional>
#include <span>
#include <vector>

#include "vofrac/fde.hpp"
#include "vofrac/integrator.hpp"
#include "vofrac/specfun.hpp"

namespace vofrac {

struct TrackingVariationalProblem {
  OrderFunction ord;
  std::function<double(double)> target;
  double a = 0.0;
  double b = 1.0;
  double x_a = 0.0;
  double x_b = 1.0;
};

/// State layout: [x, V_2..V_N, lambda_1, lambda_2..lambda_N].
struct PontryaginSystem {
  int N;
  double a;
  OdeRhs rhs;

  int state_dim() const { return 2 * N; }
};

/// f(t, x, u, V) = x' of the control system.
double control_dynamics(double t, double x, double u, std::span<const double> V, const TrackingVariationalProblem& problem,
                        int N);

/// Minimizer of the Hamiltonian in u: g - B^-1 s^(alpha-1) lambda_1 / 2.
double optimal_control(double t, double lambda1, const TrackingVariationalProblem& problem, int N);

/// H = (u - g)^2 + lambda_1 f(t, x, u, V) + sum_k lambda_k (k-1) s^(k-2) x.
/// V holds V_2..V_N and lambda holds lambda_1..lambda_N.
double hamiltonian(double t, double x, double u, std::span<const double> V, std::span<const double> lambda,
                   const TrackingVariationalProblem& problem, int N);

PontryaginSystem build_pontryagin(const TrackingVariationalProblem& problem, int N);

struct ShootingOptions {
  double start_eps = 1e-6;
  double step = 1e-3;
  double newton_tol = 1e-8;
  int max_iter = 25;
  double fd_perturbation = 1e-6;
  /// Shooting nodes are placed geometrically from a + start_eps with this ratio; each
  /// segment start is an unknown. A value >= (b - a) / start_eps gives single shooting.
  double node_ratio = 2.0;
  double graded_ratio = Rk4Options{}.graded_ratio;
};

struct ShootingResult {
  Trajectory trajectory;
  bool converged = false;
  int iterations = 0;
  double residual_norm = 0.0;
  std::vector<double> residual_history;  // max-norm of the residual before each Newton step and at exit
  std::vector<double> initial_costate;   // lambda_1..lambda_N at a + start_eps
};

/// Newton iteration with a finite-difference Jacobian on the shooting unknowns. Starts from
/// the zero costate with x = x_a, V = 0 at a + start_eps; the boundary residuals are
/// x(b) - x_b and lambda_k(b), k = 2..N.
ShootingResult shoot(const PontryaginSystem& system, const TrackingVariationalProblem& problem,
                     const ShootingOptions& options = {});

/// Objective int [u - g]^2 dt along a trajectory, with u rebuilt from (x, x', V) and
/// integrated by composite Simpson over the stored samples.
double evaluate_functional(const Trajectory& trajectory, const TrackingVariationalProblem& problem, int N);

}  // namespace vofrac

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace vofrac {

using State = Eigen::VectorXd;
using OdeRhs = std::function<State(double, const State&)>;

/// Sampled ODE solution. `rates[i]` is the right-hand side at (t[i], states[i]).
struct Trajectory {
  std::vector<double> t;
  std::vector<State> states;
  std::vector<State> rates;
  std::vector<bool> on_grid;  // true for points on the uniform grid origin + j * step

  std::size_t size() const { return t.size(); }

  /// State at a stored time within `tol`; throws DomainError if no sample is that close.
  const State& at(double time, double tol = 1e-9) const;

  /// Appends `other`, dropping its first point when it repeats the last stored time.
  void append(const Trajectory& other);
};

struct Rk4Options {
  double step = 1e-3;
  /// Near a singular origin the step is capped at graded_ratio * (t - origin), so the
  /// step grows geometrically until it reaches `step`.
  double graded_ratio = 0.001;
};

/// Classical fourth-order Runge-Kutta from (t0, y0) to t_end. Steps land exactly on the
/// grid origin + j * step. Throws NumericalError with the offending t when the state
/// becomes non-finite.
Trajectory integrate_rk4(const OdeRhs& rhs, double origin, double t0, const State& y0, double t_end,
                         const Rk4Options& options = {});

}  // namespace vofrac

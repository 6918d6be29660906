#include "vofrac/fde.hpp"

#include <cmath>
#include <sstream>

#include "vofrac/errors.hpp"

namespace vofrac {

FdeCoefficients fde_coefficients(double alpha, int N) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("fde_coefficients: alpha outside (0, 1)");
  if (N < 2) throw ConfigError("fde_coefficients: N must be at least 2");

  // Products of consecutive factors keep Gamma(p-1+alpha)/Gamma(alpha) and
  // Gamma(p-1+alpha)/Gamma(alpha-1) free of large intermediate values.
  FdeCoefficients c;
  double sum_a = 1.0;
  double ratio = 1.0;  // Gamma(p-1+alpha) / (Gamma(alpha) (p-1)!)
  for (int p = 2; p <= N; ++p) {
    ratio *= (p - 2 + alpha) / (p - 1);
    sum_a += ratio;
  }
  c.A = sum_a / gamma(1.0 - alpha);

  double sum_b = 1.0;
  double r = 1.0;  // Gamma(p-1+alpha) / (Gamma(alpha-1) p!)
  for (int p = 1; p <= N; ++p) {
    r *= (p - 2 + alpha) / p;
    sum_b += r;
  }
  c.B = sum_b / gamma(2.0 - alpha);

  const double denom = gamma(-alpha) * gamma(1.0 + alpha);
  double g = 1.0;  // Gamma(k-1+alpha) / (Gamma(alpha) (k-1)!)
  for (int k = 2; k <= N; ++k) {
    g *= (k - 2 + alpha) / (k - 1);
    c.C.push_back(g * gamma(alpha) / denom);
  }
  return c;
}

ReducedOdeSystem reduce(const LinearFdeProblem& problem, int N) {
  if (N < 2) throw ConfigError("reduce: N must be at least 2");
  if (!(problem.horizon > problem.a)) throw ConfigError("reduce: horizon must exceed a");
  if (!std::isfinite(problem.x0)) throw ConfigError("reduce: x0 must be finite");

  auto rhs = [problem, N](double t, const State& y) {
    const double s = t - problem.a;
    if (!(s > 0.0)) {
      std::ostringstream os;
      os << "reduced system is singular at t = " << t;
      throw DomainError(os.str());
    }
    const double alpha = problem.ord(t);
    const auto c = fde_coefficients(alpha, N);
    const double x = y[0];
    double memory = 0.0;
    for (int k = 2; k <= N; ++k) memory += c.C_at(k) * std::pow(s, 1.0 - k - alpha) * y[k - 1];
    State dy(N);
    dy[0] = (problem.source(t) - (c.A * std::pow(s, -alpha) + problem.linear_coeff) * x - memory) /
            (c.B * std::pow(s, 1.0 - alpha));
    for (int k = 2; k <= N; ++k) dy[k - 1] = (k - 1) * std::pow(s, k - 2) * x;
    return dy;
  };
  return {N, problem.a, problem.horizon, problem.x0, rhs};
}

Trajectory solve_ivp(const ReducedOdeSystem& system, double start_eps, double step, double graded_ratio) {
  if (!(start_eps > 0.0)) throw ConfigError("solve_ivp: start_eps must be positive");
  if (!(start_eps < system.horizon - system.a)) throw ConfigError("solve_ivp: start_eps beyond the horizon");
  State y0 = State::Zero(system.state_dim());
  y0[0] = system.x0;
  return integrate_rk4(system.rhs, system.a, system.a + start_eps, y0, system.horizon, {step, graded_ratio});
}

}  // namespace vofrac

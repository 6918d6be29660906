#include "vofrac/variational.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "vofrac/errors.hpp"
#include "vofrac/quadrature.hpp"

namespace vofrac {
namespace {

double elapsed(double t, double a) {
  const double s = t - a;
  if (!(s > 0.0)) {
    std::ostringstream os;
    os << "control system is singular at t = " << t;
    throw DomainError(os.str());
  }
  return s;
}

void require_sizes(std::span<const double> V, std::span<const double> lambda, int N) {
  if (static_cast<int>(V.size()) != N - 1) throw ConfigError("hamiltonian: V must hold V_2..V_N");
  if (static_cast<int>(lambda.size()) != N) throw ConfigError("hamiltonian: lambda must hold lambda_1..lambda_N");
}

struct Segment {
  double t0;
  double t1;
};

std::vector<Segment> shooting_segments(double a, double b, double eps, double ratio) {
  std::vector<double> nodes{a + eps};
  if (ratio > 1.0) {
    double s = eps * ratio;
    while (s < b - a) {
      nodes.push_back(a + s);
      s *= ratio;
    }
  }
  // A final segment much shorter than its neighbour adds nothing but an extra unknown block.
  if (nodes.size() > 1) {
    const double last = nodes.back();
    const double prev = nodes[nodes.size() - 2];
    if (b - last < 0.25 * (last - prev)) nodes.pop_back();
  }
  nodes.push_back(b);
  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) segs.push_back({nodes[i], nodes[i + 1]});
  return segs;
}

}  // namespace

double control_dynamics(double t, double x, double u, std::span<const double> V,
                        const TrackingVariationalProblem& problem, int N) {
  const double s = elapsed(t, problem.a);
  const double alpha = problem.ord(t);
  const auto c = fde_coefficients(alpha, N);
  double f = (std::pow(s, alpha - 1.0) * u - c.A / s * x) / c.B;
  for (int k = 2; k <= N; ++k) f -= c.C_at(k) / c.B * std::pow(s, -k) * V[static_cast<std::size_t>(k - 2)];
  return f;
}

double optimal_control(double t, double lambda1, const TrackingVariationalProblem& problem, int N) {
  const double s = elapsed(t, problem.a);
  const double alpha = problem.ord(t);
  const auto c = fde_coefficients(alpha, N);
  return problem.target(t) - 0.5 / c.B * std::pow(s, alpha - 1.0) * lambda1;
}

double hamiltonian(double t, double x, double u, std::span<const double> V, std::span<const double> lambda,
                   const TrackingVariationalProblem& problem, int N) {
  require_sizes(V, lambda, N);
  const double s = elapsed(t, problem.a);
  const double miss = u - problem.target(t);
  double h = miss * miss + lambda[0] * control_dynamics(t, x, u, V, problem, N);
  for (int k = 2; k <= N; ++k) h += lambda[static_cast<std::size_t>(k - 1)] * (k - 1) * std::pow(s, k - 2) * x;
  return h;
}

PontryaginSystem build_pontryagin(const TrackingVariationalProblem& problem, int N) {
  if (N < 2) throw ConfigError("build_pontryagin: N must be at least 2");
  if (!(problem.a < problem.b)) throw ConfigError("build_pontryagin: need a < b");
  auto rhs = [problem, N](double t, const State& y) {
    const double s = elapsed(t, problem.a);
    const double alpha = problem.ord(t);
    const auto c = fde_coefficients(alpha, N);
    const double x = y[0];
    const double l1 = y[N];
    State dy(2 * N);
    double dx = std::pow(s, alpha - 1.0) * problem.target(t) / c.B -
                0.5 / (c.B * c.B) * std::pow(s, 2.0 * alpha - 2.0) * l1 - c.A / c.B / s * x;
    double dl1 = c.A / c.B / s * l1;
    for (int k = 2; k <= N; ++k) {
      dx -= c.C_at(k) / c.B * std::pow(s, -k) * y[k - 1];
      dy[k - 1] = (k - 1) * std::pow(s, k - 2) * x;
      dl1 -= (k - 1) * std::pow(s, k - 2) * y[N + k - 1];
      dy[N + k - 1] = c.C_at(k) / c.B * std::pow(s, -k) * l1;
    }
    dy[0] = dx;
    dy[N] = dl1;
    return dy;
  };
  return {N, problem.a, rhs};
}

ShootingResult shoot(const PontryaginSystem& system, const TrackingVariationalProblem& problem,
                     const ShootingOptions& options) {
  const int N = system.N;
  const int dim = system.state_dim();
  if (!(options.start_eps > 0.0 && options.start_eps < problem.b - problem.a))
    throw ConfigError("shoot: start_eps must lie inside (0, b - a)");
  if (!(options.newton_tol > 0.0) || options.max_iter < 0) throw ConfigError("shoot: invalid Newton settings");

  const auto segs = shooting_segments(problem.a, problem.b, options.start_eps, options.node_ratio);
  const int M = static_cast<int>(segs.size());
  const int unknowns = N + dim * (M - 1);
  const Rk4Options rk{options.step, options.graded_ratio};

  auto col0 = [&](int j) { return j == 0 ? 0 : N + dim * (j - 1); };

  // Segment start states from the unknown vector.
  auto start_state = [&](const Eigen::VectorXd& z, int j) {
    State y(dim);
    if (j == 0) {
      y.setZero();
      y[0] = problem.x_a;
      y.tail(N) = z.head(N);
    } else {
      y = z.segment(col0(j), dim);
    }
    return y;
  };
  auto propagate = [&](int j, const State& y0) {
    const auto traj = integrate_rk4(system.rhs, system.a, segs[j].t0, y0, segs[j].t1, rk);
    return traj.states.back();
  };
  // Residual rows contributed by the end state of segment j.
  // Continuity mismatches are measured relative to the size of the next node state.
  std::vector<double> scale(static_cast<std::size_t>(M), 1.0);
  auto end_rows = [&](int j, const State& end, const Eigen::VectorXd& z, Eigen::VectorXd& F) {
    if (j < M - 1) {
      F.segment(dim * j, dim) = (end - z.segment(col0(j + 1), dim)) / scale[static_cast<std::size_t>(j)];
    } else {
      const int r = dim * (M - 1);
      F[r] = end[0] - problem.x_b;
      for (int k = 2; k <= N; ++k) F[r + k - 1] = end[N + k - 1];
    }
  };

  // Zero costate; interior nodes seeded by a forward sweep so the first residual is the
  // single-shooting one.
  Eigen::VectorXd z = Eigen::VectorXd::Zero(unknowns);
  {
    State y = start_state(z, 0);
    for (int j = 0; j + 1 < M; ++j) {
      y = propagate(j, y);
      z.segment(col0(j + 1), dim) = y;
    }
  }

  ShootingResult result;
  const double h = options.fd_perturbation;
  Eigen::VectorXd F(unknowns);
  std::vector<State> ends(static_cast<std::size_t>(M));
  for (int iter = 0;; ++iter) {
    for (int j = 0; j + 1 < M; ++j)
      scale[static_cast<std::size_t>(j)] = std::max(1.0, z.segment(col0(j + 1), dim).lpNorm<Eigen::Infinity>());
    for (int j = 0; j < M; ++j) {
      ends[static_cast<std::size_t>(j)] = propagate(j, start_state(z, j));
      end_rows(j, ends[static_cast<std::size_t>(j)], z, F);
    }
    const double norm = F.lpNorm<Eigen::Infinity>();
    result.residual_history.push_back(norm);
    result.residual_norm = norm;
    result.iterations = iter;
    if (!std::isfinite(norm)) throw NumericalError("shoot: non-finite residual");
    if (norm <= options.newton_tol) {
      result.converged = true;
      break;
    }
    if (iter == options.max_iter) break;

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(unknowns, unknowns);
    for (int j = 0; j < M; ++j) {
      const int width = j == 0 ? N : dim;
      for (int i = 0; i < width; ++i) {
        Eigen::VectorXd zp = z;
        zp[col0(j) + i] += h;
        const State end = propagate(j, start_state(zp, j));
        Eigen::VectorXd Fp = F;
        end_rows(j, end, z, Fp);
        J.col(col0(j) + i) = (Fp - F) / h;
      }
      // Continuity rows of the previous segment depend on this segment's start with slope -1.
      if (j > 0)
        J.block(dim * (j - 1), col0(j), dim, dim) -=
            Eigen::MatrixXd::Identity(dim, dim) / scale[static_cast<std::size_t>(j - 1)];
    }
    // Node states differ by many orders of magnitude near the singular start, so the system
    // is equilibrated and the rank test disabled.
    Eigen::VectorXd rows = J.rowwise().lpNorm<Eigen::Infinity>();
    Eigen::VectorXd cols = J.colwise().lpNorm<Eigen::Infinity>().transpose();
    rows = rows.unaryExpr([](double v) { return v > 0.0 ? 1.0 / v : 1.0; });
    cols = cols.unaryExpr([](double v) { return v > 0.0 ? 1.0 / v : 1.0; });
    Eigen::FullPivLU<Eigen::MatrixXd> lu(rows.asDiagonal() * J * cols.asDiagonal());
    lu.setThreshold(std::numeric_limits<double>::min());
    z -= cols.asDiagonal() * lu.solve(rows.asDiagonal() * F);
  }

  for (int j = 0; j < M; ++j)
    result.trajectory.append(integrate_rk4(system.rhs, system.a, segs[j].t0, start_state(z, j), segs[j].t1, rk));
  const State& first = result.trajectory.states.front();
  result.initial_costate.assign(first.data() + N, first.data() + dim);
  return result;
}

double evaluate_functional(const Trajectory& trajectory, const TrackingVariationalProblem& problem, int N) {
  std::vector<double> integrand;
  integrand.reserve(trajectory.size());
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const double t = trajectory.t[i];
    const State& y = trajectory.states[i];
    const double s = elapsed(t, problem.a);
    const double alpha = problem.ord(t);
    const auto c = fde_coefficients(alpha, N);
    double u = c.A * std::pow(s, -alpha) * y[0] + c.B * std::pow(s, 1.0 - alpha) * trajectory.rates[i][0];
    for (int k = 2; k <= N; ++k) u += c.C_at(k) * std::pow(s, 1.0 - k - alpha) * y[k - 1];
    const double miss = u - problem.target(t);
    integrand.push_back(miss * miss);
  }
  return quad::simpson(trajectory.t, integrand);
}

}  // namespace vofrac

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "vofrac/cases.hpp"
#include "vofrac/errors.hpp"
#include "vofrac/fde.hpp"
#include "vofrac/specfun.hpp"
#include "vofrac/variational.hpp"

using namespace vofrac;
using doctest::Approx;

namespace {

const double kTablePoints[] = {0.2, 0.4, 0.6, 0.8, 1.0};

TrackingVariationalProblem tracking_problem() { return cases::varmin_case("varmin-tracking").problem; }

}  // namespace

TEST_CASE("source term of the state equation reduces to 1 / (B Gamma((7 - t)/4))") {
  const auto p = tracking_problem();
  for (int N : {2, 3}) {
    const auto sys = build_pontryagin(p, N);
    for (double t : {0.1, 0.5, 1.0}) {
      const double B = fde_coefficients(p.ord(t), N).B;
      const State dy = sys.rhs(t, State::Zero(2 * N));
      CHECK(dy[0] == Approx(1.0 / (B * std::tgamma((7.0 - t) / 4.0))).epsilon(1e-13));
    }
  }
}

TEST_CASE("zero costate reduces the state equations to the fde system") {
  const auto p = tracking_problem();
  const int N = 3;
  const auto sys = build_pontryagin(p, N);
  const auto fde = reduce(LinearFdeProblem{p.ord, p.target, 0.0, p.a, p.x_a, p.b}, N);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 5; ++i) {
    const double t = 0.05 + 0.9 * (u(rng) + 1) / 2;
    State y = State::Zero(2 * N);
    for (int j = 0; j < N; ++j) y[j] = u(rng);
    const State full = sys.rhs(t, y);
    const State reduced = fde.rhs(t, y.head(N));
    for (int j = 0; j < N; ++j) CHECK(full[j] == Approx(reduced[j]).epsilon(1e-13));
    for (int j = N; j < 2 * N; ++j) CHECK(full[j] == 0.0);
  }
}

TEST_CASE("costate equations are the negative Hamiltonian gradient") {
  const auto p = tracking_problem();
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int N : {2, 3}) {
    const auto sys = build_pontryagin(p, N);
    for (int sample = 0; sample < 20; ++sample) {
      const double t = 0.05 + 0.95 * (u(rng) + 1) / 2;
      State y(2 * N);
      for (int j = 0; j < 2 * N; ++j) y[j] = u(rng);
      const State dy = sys.rhs(t, y);
      const double uc = optimal_control(t, y[N], p, N);

      auto H = [&](const State& z, double control) {
        std::vector<double> V(z.data() + 1, z.data() + N);
        std::vector<double> L(z.data() + N, z.data() + 2 * N);
        return hamiltonian(t, z[0], control, V, L, p, N);
      };
      auto partial = [&](int j, double h) {
        State up = y, dn = y;
        up[j] += h;
        dn[j] -= h;
        return (H(up, uc) - H(dn, uc)) / (2 * h);
      };
      auto close = [](double a, double b) { return std::abs(a - b) <= 1e-6 * std::max(std::abs(a), std::abs(b)) + 1e-9; };

      // dH/du = 0 at the optimal control.
      const double hu = 1e-4;
      CHECK(std::abs((H(y, uc + hu) - H(y, uc - hu)) / (2 * hu)) <= 1e-6 * std::abs(H(y, uc)) + 1e-8);
      // x' = dH/dlambda_1, V_k' = dH/dlambda_k, lambda' = -dH/d(x, V).
      for (int j = 0; j < N; ++j) {
        CHECK(close(dy[N + j], -partial(j, 1e-4)));
        CHECK(close(dy[j], partial(N + j, 1e-4)));
      }
    }
  }
}

TEST_CASE("rhs is finite on [1e-6, 1]") {
  const auto sys = build_pontryagin(tracking_problem(), 2);
  State y(4);
  y << 0.3, -0.2, 1.5, -0.7;
  for (double t : {1e-6, 1e-4, 0.01, 0.5, 1.0}) CHECK(sys.rhs(t, y).allFinite());
}

TEST_CASE("shooting recovers x = t on the tracking instance") {
  const auto p = tracking_problem();
  const auto res = shoot(build_pontryagin(p, 2), p);
  REQUIRE(res.converged);
  CHECK(res.iterations <= 25);
  const auto& tr = res.trajectory;
  CHECK(std::abs(tr.states.back()[0] - 1.0) <= 1e-8);
  for (double t : kTablePoints) CHECK(std::abs(tr.at(t)[0] - t) <= 1e-2);
  // Reference trajectory values, to their agreement level with x = t.
  CHECK(std::abs(tr.at(0.2)[0] - 0.1998346692) <= 2e-4);
  CHECK(std::abs(tr.at(0.4)[0] - 0.3999020706) <= 2e-4);
  CHECK(std::abs(tr.at(0.6)[0] - 0.5999392936) <= 2e-4);
  CHECK(std::abs(tr.at(0.8)[0] - 0.7999708526) <= 2e-4);
  for (std::size_t i = 1; i < res.residual_history.size(); ++i)
    CHECK(res.residual_history[i] < res.residual_history[i - 1]);
  CHECK(evaluate_functional(tr, p, 2) <= 1e-4);
}

TEST_CASE("shooting with an active costate") {
  auto p = tracking_problem();
  p.x_b = 1.5;
  for (int N : {2, 3}) {
    const auto res = shoot(build_pontryagin(p, N), p);
    REQUIRE(res.converged);
    CHECK(res.iterations >= 1);
    CHECK(res.iterations <= 25);
    CHECK(std::abs(res.trajectory.states.back()[0] - 1.5) <= 1e-8);
    for (int k = 2; k <= N; ++k) CHECK(std::abs(res.trajectory.states.back()[N + k - 1]) <= 1e-8);
    for (std::size_t i = 1; i < res.residual_history.size(); ++i)
      CHECK(res.residual_history[i] < res.residual_history[i - 1]);
    CHECK(res.initial_costate.size() == static_cast<std::size_t>(N));
    CHECK(res.initial_costate[0] != 0.0);
  }
}

TEST_CASE("the shooting solution beats perturbed admissible trajectories") {
  for (double xb : {1.0, 1.5}) {
    auto p = tracking_problem();
    p.x_b = xb;
    const int N = 2;
    const auto res = shoot(build_pontryagin(p, N), p);
    REQUIRE(res.converged);
    const double best = evaluate_functional(res.trajectory, p, N);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coef(-0.1, 0.1);
    for (int trial = 0; trial < 10; ++trial) {
      // x + sum_j c_j sin(j pi t) keeps both boundary values; V_2 = int_0^t x.
      double c[3];
      for (double& v : c) v = coef(rng);
      Trajectory tr = res.trajectory;
      for (std::size_t i = 0; i < tr.size(); ++i) {
        const double t = tr.t[i];
        for (int j = 1; j <= 3; ++j) {
          const double w = j * std::numbers::pi;
          tr.states[i][0] += c[j - 1] * std::sin(w * t);
          tr.states[i][1] += c[j - 1] * (1.0 - std::cos(w * t)) / w;
          tr.rates[i][0] += c[j - 1] * w * std::cos(w * t);
        }
      }
      CHECK(evaluate_functional(tr, p, N) > best);
    }
    if (xb == 1.0) {
      Trajectory tr = res.trajectory;
      for (std::size_t i = 0; i < tr.size(); ++i) {
        tr.states[i][0] += 0.1 * std::sin(std::numbers::pi * tr.t[i]);
        tr.rates[i][0] += 0.1 * std::numbers::pi * std::cos(std::numbers::pi * tr.t[i]);
        tr.states[i][1] += 0.1 * (1.0 - std::cos(std::numbers::pi * tr.t[i])) / std::numbers::pi;
      }
      CHECK(evaluate_functional(tr, p, N) > best);
    }
  }
}

TEST_CASE("functional vanishes on a trajectory that realises the target") {
  const auto p = tracking_problem();
  const int N = 3;
  Trajectory tr;
  for (int i = 0; i <= 2000; ++i) {
    const double t = 1e-6 + (1.0 - 1e-6) * i / 2000.0;
    State y(2 * N), r(2 * N);
    y << t, 0.5 * t * t, 2.0 / 3.0 * t * t * t, 0, 0, 0;
    r.setZero();
    r[0] = 1.0;
    tr.t.push_back(t);
    tr.states.push_back(y);
    tr.rates.push_back(r);
    tr.on_grid.push_back(false);
  }
  CHECK(evaluate_functional(tr, p, N) <= 1e-20);
}

TEST_CASE("zero target with zero boundary values is a fixed point") {
  TrackingVariationalProblem p{cases::linear_order(), [](double) { return 0.0; }, 0.0, 1.0, 0.0, 0.0};
  const auto res = shoot(build_pontryagin(p, 2), p);
  CHECK(res.converged);
  CHECK(res.iterations == 0);
  CHECK(res.residual_norm == 0.0);
  for (const auto& y : res.trajectory.states) CHECK(y.isZero(0.0));
  CHECK(evaluate_functional(res.trajectory, p, 2) == 0.0);
}

TEST_CASE("non-convergence is reported, not hidden") {
  auto p = tracking_problem();
  p.x_b = 1.5;
  ShootingOptions opts;
  opts.max_iter = 0;
  const auto res = shoot(build_pontryagin(p, 2), p, opts);
  CHECK_FALSE(res.converged);
  CHECK(res.residual_norm > 1e-8);
}

TEST_CASE("variational preconditions") {
  const auto p = tracking_problem();
  CHECK_THROWS_AS(build_pontryagin(p, 1), ConfigError);
  ShootingOptions opts;
  opts.start_eps = 0.0;
  CHECK_THROWS_AS(shoot(build_pontryagin(p, 2), p, opts), ConfigError);
  std::vector<double> V{0.1}, L{0.1};
  CHECK_THROWS_AS(hamiltonian(0.5, 0.0, 0.0, V, L, p, 2), ConfigError);
}

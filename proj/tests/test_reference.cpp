#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.hpp"
#include "vofrac/cases.hpp"
#include "vofrac/errors.hpp"
#include "vofrac/reference.hpp"

using namespace vofrac;
using doctest::Approx;
using support::kUnit;

namespace {

OrderFunction lin() { return cases::linear_order(); }
OrderFunction half() { return OrderFunction::constant(0.5, kUnit); }

// Closed forms written out independently with std::tgamma / boost digamma.
double rl_closed(double g, double alpha, double dalpha, double t) {
  const double m = std::tgamma(g + 1) / std::tgamma(g - alpha + 1) * std::pow(t, g - alpha);
  const double br = std::log(t) - boost::math::digamma(g - alpha + 2) + boost::math::digamma(1 - alpha);
  return m - dalpha * std::tgamma(g + 1) / std::tgamma(g - alpha + 2) * std::pow(t, g - alpha + 1) * br;
}

}  // namespace

TEST_CASE("closed forms for t^4 with alpha = (t+1)/4") {
  const PowerFunction p{4.0, 0.0};
  CHECK(power_left_integral(p, lin(), 1.0) == Approx(24.0 / std::tgamma(5.5)).epsilon(1e-13));
  CHECK(power_left_integral(p, lin(), 1.0) == Approx(0.45851598).epsilon(1e-7));
  CHECK(power_left_marchaud(p, lin(), 1.0) == Approx(2.06332191).epsilon(1e-7));
  CHECK(power_left_marchaud(p, lin(), 0.5) ==
        Approx(24.0 / std::tgamma(4.625) * std::pow(0.5, 3.625)).epsilon(1e-13));
  CHECK(power_left_rl_derivative(p, lin(), 1.0) == Approx(2.47307507).epsilon(1e-7));
  CHECK(power_left_rl_derivative(p, lin(), 0.5) == Approx(rl_closed(4, 0.375, 0.25, 0.5)).epsilon(1e-12));
}

TEST_CASE("closed forms: degenerate cases") {
  CHECK(power_left_integral({0.0, 0.0}, half(), 1.0) == Approx(1.0 / std::tgamma(1.5)).epsilon(1e-13));
  const double alpha = 0.35;
  const auto c = OrderFunction::constant(alpha, kUnit);
  for (double t : {0.2, 0.9}) CHECK(power_left_marchaud({alpha, 0.0}, c, t) == Approx(std::tgamma(alpha + 1)).epsilon(1e-13));
  for (double t : {0.3, 0.8}) CHECK(power_left_rl_derivative({4.0, 0.0}, half(), t) == power_left_marchaud({4.0, 0.0}, half(), t));
  CHECK_THROWS_AS(power_left_integral({4.0, 0.0}, lin(), 0.0), DomainError);
  CHECK_THROWS_AS(power_left_marchaud({4.0, 0.5}, lin(), 0.25), DomainError);
}

TEST_CASE("left oracles match the closed forms within 1e-6 on t = 0.1..1") {
  const auto x = support::monomial(4);
  const PowerFunction p{4.0, 0.0};
  for (double t : support::tenth_grid()) {
    CHECK(std::abs(oracle_left_integral(x, lin(), t).value - power_left_integral(p, lin(), t)) <= 1e-6);
    CHECK(std::abs(oracle_left_marchaud(x, lin(), t).value - power_left_marchaud(p, lin(), t)) <= 1e-6);
    CHECK(std::abs(oracle_left_rl_derivative(x, lin(), t).value - power_left_rl_derivative(p, lin(), t)) <= 1e-6);
  }
}

TEST_CASE("oracles report an error estimate within the tolerance") {
  const auto x = support::wiggle();
  for (double tol : {1e-6, 1e-9}) {
    for (double t : {0.05, 0.5, 1.0}) {
      CHECK(oracle_left_integral(x, lin(), t, tol).error <= tol);
      CHECK(oracle_left_marchaud(x, lin(), t, tol).error <= tol);
      CHECK(oracle_left_rl_derivative(x, lin(), t, tol).error <= tol);
    }
  }
}

TEST_CASE("the two Marchaud forms agree within 1e-7") {
  for (const auto& x : {support::monomial(4), support::wiggle()}) {
    for (double t : support::tenth_grid()) {
      const double parts = oracle_left_marchaud(x, lin(), t).value;
      const double diff = oracle_left_marchaud_difference(x, lin(), t).value;
      CHECK(std::abs(parts - diff) <= 1e-7);
    }
  }
}

TEST_CASE("oracles on elementary inputs") {
  const auto zero = support::constant(0.0);
  CHECK(oracle_left_integral(zero, lin(), 0.7).value == 0.0);
  CHECK(oracle_right_integral(zero, lin(), 0.7).value == 0.0);

  const double c = 2.5;
  const auto cx = support::constant(c);
  for (double t : {0.1, 0.6, 1.0}) {
    const double a = lin()(t);
    CHECK(oracle_left_marchaud(cx, lin(), t).value == Approx(c * std::pow(t, -a) / std::tgamma(1 - a)).epsilon(1e-10));
    CHECK(oracle_left_rl_derivative(cx, half(), t).value == Approx(c * std::pow(t, -0.5) / std::sqrt(std::numbers::pi)).epsilon(1e-10));
  }
  for (double t : {0.0, 0.4, 0.9}) {
    const double a = lin()(t);
    CHECK(oracle_right_marchaud(cx, lin(), t).value == Approx(c * std::pow(1 - t, -a) / std::tgamma(1 - a)).epsilon(1e-10));
  }

  CHECK(oracle_left_marchaud(support::monomial(1), half(), 1.0).value == Approx(1.1283792).epsilon(1e-7));
  CHECK(oracle_right_integral(support::constant(1.0), half(), 0.0).value == Approx(1.0 / std::tgamma(1.5)).epsilon(1e-10));
  CHECK(oracle_right_marchaud(support::monomial(1), half(), 0.0).value == Approx(-0.5641896).epsilon(1e-7));
}

TEST_CASE("right oracles mirror the left ones under tau -> 1 - tau") {
  const auto mirrored = support::monomial(4, 1.0, 1.0, true);  // (1 - tau)^4
  CHECK(oracle_right_integral(mirrored, half(), 0.0).value == Approx(24.0 / std::tgamma(5.5)).epsilon(1e-9));
  for (double t : {0.0, 0.3, 0.75}) {
    const double s = 1.0 - t;
    CHECK(oracle_right_marchaud(mirrored, half(), t).value ==
          Approx(24.0 / std::tgamma(4.5) * std::pow(s, 3.5)).epsilon(1e-8));
    CHECK(oracle_right_rl_derivative(mirrored, half(), t).value ==
          Approx(oracle_right_marchaud(mirrored, half(), t).value).epsilon(1e-8));
    // Variable order: alpha(tau) = (tau+1)/4 reflects to (2-s)/4 with derivative -1/4.
    const double a = (2.0 - s) / 4.0;
    CHECK(std::abs(oracle_right_rl_derivative(mirrored, lin(), t).value - rl_closed(4, a, -0.25, s)) <= 1e-7);
    CHECK(std::abs(oracle_right_integral(mirrored, lin(), t).value -
                   24.0 / std::tgamma(5 + a) * std::pow(s, 4 + a)) <= 1e-8);
  }
}

TEST_CASE("constant order: RL derivative oracle equals the Marchaud oracle") {
  for (const auto& x : {support::monomial(4), support::wiggle()})
    for (double t : support::tenth_grid())
      CHECK(std::abs(oracle_left_rl_derivative(x, half(), t).value - oracle_left_marchaud(x, half(), t).value) <= 2e-8);
}

TEST_CASE("weak exponent law through a grid interpolant") {
  // y = I^beta x on a grid, interpolated; then I^alpha(t) y against I^(alpha(t)+beta) x.
  const double beta = 0.3;
  const auto x = support::monomial(2);
  const auto cb = OrderFunction::constant(beta, kUnit);
  const int points = 401;
  const double h = 1.0 / (points - 1);
  std::vector<double> y(points, 0.0);
  for (int i = 1; i < points; ++i) y[static_cast<std::size_t>(i)] = oracle_left_integral(x, cb, i * h).value;
  auto spline = std::make_shared<boost::math::interpolators::cardinal_cubic_b_spline<double>>(y.begin(), y.end(), 0.0, h);
  const SmoothFunction yi({[spline](double s) { return (*spline)(s); }, [spline](double s) { return spline->prime(s); }},
                          kUnit);
  const auto sum_order = lin().shifted(beta);
  for (double t : {0.2, 0.4, 0.6, 0.8, 1.0}) {
    const double composed = oracle_left_integral(yi, lin(), t, 1e-7).value;
    const double direct = oracle_left_integral(x, sum_order, t).value;
    CHECK(std::abs(composed - direct) <= 1e-4);
  }
}

TEST_CASE("oracles are linear in x") {
  const auto f = support::monomial(4);
  const auto g = support::wiggle();
  const auto h = linear_combination(2.0, f, -3.0, g);
  for (double t : {0.25, 0.8}) {
    CHECK(oracle_left_integral(h, lin(), t).value ==
          Approx(2 * oracle_left_integral(f, lin(), t).value - 3 * oracle_left_integral(g, lin(), t).value).epsilon(1e-8));
    CHECK(oracle_left_marchaud(h, lin(), t).value ==
          Approx(2 * oracle_left_marchaud(f, lin(), t).value - 3 * oracle_left_marchaud(g, lin(), t).value).epsilon(1e-8));
    CHECK(oracle_left_rl_derivative(h, lin(), t).value ==
          Approx(2 * oracle_left_rl_derivative(f, lin(), t).value - 3 * oracle_left_rl_derivative(g, lin(), t).value).epsilon(1e-8));
    CHECK(oracle_right_integral(h, lin(), t).value ==
          Approx(2 * oracle_right_integral(f, lin(), t).value - 3 * oracle_right_integral(g, lin(), t).value).epsilon(1e-8));
    CHECK(oracle_right_marchaud(h, lin(), t).value ==
          Approx(2 * oracle_right_marchaud(f, lin(), t).value - 3 * oracle_right_marchaud(g, lin(), t).value).epsilon(1e-8));
    CHECK(oracle_right_rl_derivative(h, lin(), t).value ==
          Approx(2 * oracle_right_rl_derivative(f, lin(), t).value - 3 * oracle_right_rl_derivative(g, lin(), t).value).epsilon(1e-8));
  }
}

TEST_CASE("oracle preconditions and failure reporting") {
  const auto x = support::monomial(4);
  CHECK_THROWS_AS(oracle_left_integral(x, lin(), 0.0), DomainError);
  CHECK_THROWS_AS(oracle_right_marchaud(x, lin(), 1.0), DomainError);
  CHECK_THROWS_AS(oracle_left_marchaud(x, OrderFunction::constant(1.2, kUnit), 0.5), DomainError);
  CHECK_THROWS_AS(oracle_left_rl_derivative(x, lin(), 0.5, 1e-300), QuadratureError);
}

TEST_CASE("SmoothFunction: derivative table checks") {
  const auto x = support::wiggle();
  CHECK(x.derivative_mismatch() <= 1e-5);
  CHECK(cases::operator_case("t4-variable").x.derivative_mismatch() <= 1e-5);
  CHECK_THROWS_AS(x.derivative(9, 0.5), ConfigError);
  CHECK_THROWS_AS(SmoothFunction({[](double) { return 0.0; }}, kUnit), ConfigError);
}

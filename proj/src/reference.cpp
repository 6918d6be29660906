#include "vofrac/reference.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vofrac/errors.hpp"
#include "vofrac/quadrature.hpp"

namespace vofrac {
namespace {

double order_at(const OrderFunction& ord, double t) {
  const double alpha = ord(t);
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream os;
    os << "order alpha(" << t << ") = " << alpha << " outside (0, 1)";
    throw DomainError(os.str());
  }
  return alpha;
}

void require_left(const Interval& dom, double t, const char* op) {
  if (!(t > dom.a && t <= dom.b)) {
    std::ostringstream os;
    os << op << ": t = " << t << " outside (" << dom.a << ", " << dom.b << "]";
    throw DomainError(os.str());
  }
}

void require_right(const Interval& dom, double t, const char* op) {
  if (!(t >= dom.a && t < dom.b)) {
    std::ostringstream os;
    os << op << ": t = " << t << " outside [" << dom.a << ", " << dom.b << ")";
    throw DomainError(os.str());
  }
}

void require_power(const PowerFunction& p, double t, const char* op) {
  if (!(p.gamma_exp > -1.0)) throw DomainError(std::string(op) + ": exponent must exceed -1");
  if (!(t > p.a)) {
    std::ostringstream os;
    os << op << ": t = " << t << " must exceed a = " << p.a;
    throw DomainError(os.str());
  }
}

void check_error(const quad::QuadResult& r, double tol, const char* op) {
  if (r.error > tol) throw QuadratureError(std::string(op) + ": quadrature tolerance not met", r.error);
}

// Integral of (t - tau)^(-alpha) y(tau) over [t - d, t], after u = (t - tau)^(1 - alpha).
// `sign` = -1 mirrors to (tau - t)^(-alpha) over [t, t + d].
quad::QuadResult weak_kernel_integral(const SmoothFunction::Fn& y, double t, double d, double alpha, double sign,
                                      double tol) {
  const double p = 1.0 / (1.0 - alpha);
  const double upper = std::pow(d, 1.0 - alpha);
  auto f = [&](double u) { return y(t - sign * std::min(std::pow(u, p), d)); };
  auto r = quad::integrate(f, 0.0, upper, tol * (1.0 - alpha));
  r.value *= p;
  r.error *= p;
  return r;
}

// Integral of (t - tau)^(alpha - 1) y(tau) over [t - d, t], after u = (t - tau)^alpha.
quad::QuadResult integral_kernel(const SmoothFunction::Fn& y, double t, double d, double alpha, double sign,
                                 double tol) {
  const double p = 1.0 / alpha;
  const double upper = std::pow(d, alpha);
  auto f = [&](double u) { return y(t - sign * std::min(std::pow(u, p), d)); };
  auto r = quad::integrate(f, 0.0, upper, tol * alpha);
  r.value *= p;
  r.error *= p;
  return r;
}

OracleResult marchaud_by_parts(const SmoothFunction& x, double alpha, double t, double tol) {
  const double d = t - x.domain().a;
  const double g = gamma(1.0 - alpha);
  auto dx = [&x](double tau) { return x.derivative(1, tau); };
  const auto r = weak_kernel_integral(dx, t, d, alpha, 1.0, tol * g);
  const double value = (x(x.domain().a) * std::pow(d, -alpha) + r.value) / g;
  return {value, r.error / g};
}

}  // namespace

SmoothFunction::SmoothFunction(std::vector<Fn> derivs, Interval domain)
    : derivs_(std::move(derivs)), domain_(domain) {
  if (derivs_.size() < 2) throw ConfigError("SmoothFunction needs x and at least its first derivative");
  if (!(domain_.a < domain_.b)) throw ConfigError("SmoothFunction: empty domain");
}

double SmoothFunction::derivative(int k, double t) const {
  if (k < 0 || k > max_order()) {
    std::ostringstream os;
    os << "derivative of order " << k << " requested, only " << max_order() << " available";
    throw ConfigError(os.str());
  }
  return derivs_[static_cast<std::size_t>(k)](t);
}

double SmoothFunction::derivative_mismatch(int samples, double h) const {
  double worst = 0.0;
  for (int j = 1; j <= max_order(); ++j) {
    for (int i = 1; i < samples - 1; ++i) {
      const double t = domain_.a + domain_.length() * i / (samples - 1);
      const double fd = (derivative(j - 1, t + h) - derivative(j - 1, t - h)) / (2.0 * h);
      worst = std::max(worst, std::abs(fd - derivative(j, t)));
    }
  }
  return worst;
}

SmoothFunction linear_combination(double c1, const SmoothFunction& f, double c2, const SmoothFunction& g) {
  const std::size_t m = std::min(f.derivs_.size(), g.derivs_.size());
  std::vector<SmoothFunction::Fn> out;
  out.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    out.push_back([c1, c2, a = f.derivs_[k], b = g.derivs_[k]](double t) { return c1 * a(t) + c2 * b(t); });
  }
  return SmoothFunction(std::move(out), f.domain_);
}

double power_left_integral(const PowerFunction& p, const OrderFunction& ord, double t) {
  require_power(p, t, "power_left_integral");
  const double alpha = order_at(ord, t);
  const double g = p.gamma_exp;
  return gamma(g + 1.0) / gamma(g + alpha + 1.0) * std::pow(t - p.a, g + alpha);
}

double power_left_marchaud(const PowerFunction& p, const OrderFunction& ord, double t) {
  require_power(p, t, "power_left_marchaud");
  const double alpha = order_at(ord, t);
  const double g = p.gamma_exp;
  return gamma(g + 1.0) / gamma(g - alpha + 1.0) * std::pow(t - p.a, g - alpha);
}

double power_left_rl_derivative(const PowerFunction& p, const OrderFunction& ord, double t) {
  const double marchaud = power_left_marchaud(p, ord, t);
  const double dalpha = ord.deriv(t);
  if (dalpha == 0.0) return marchaud;
  const double alpha = ord(t);
  const double g = p.gamma_exp;
  const double d = t - p.a;
  const double bracket = std::log(d) - digamma(g - alpha + 2.0) + digamma(1.0 - alpha);
  return marchaud - dalpha * gamma(g + 1.0) / gamma(g - alpha + 2.0) * std::pow(d, g - alpha + 1.0) * bracket;
}

OracleResult oracle_left_integral(const SmoothFunction& x, const OrderFunction& ord, double t, double tol) {
  require_left(x.domain(), t, "oracle_left_integral");
  const double alpha = order_at(ord, t);
  const double g = gamma(alpha);
  auto y = [&x](double tau) { return x(tau); };
  const auto r = integral_kernel(y, t, t - x.domain().a, alpha, 1.0, tol * g);
  check_error(r, tol * g, "oracle_left_integral");
  return {r.value / g, r.error / g};
}

OracleResult oracle_right_integral(const SmoothFunction& x, const OrderFunction& ord, double t, double tol) {
  require_right(x.domain(), t, "oracle_right_integral");
  const double alpha = order_at(ord, t);
  const double g = gamma(alpha);
  auto y = [&x](double tau) { return x(tau); };
  const auto r = integral_kernel(y, t, x.domain().b - t, alpha, -1.0, tol * g);
  check_error(r, tol * g, "oracle_right_integral");
  return {r.value / g, r.error / g};
}

OracleResult oracle_left_marchaud(const SmoothFunction& x, const OrderFunction& ord, double t, double tol) {
  require_left(x.domain(), t, "oracle_left_marchaud");
  const double alpha = order_at(ord, t);
  const auto parts = marchaud_by_parts(x, alpha, t, tol);
  const auto diff = oracle_left_marchaud_difference(x, ord, t);
  if (std::abs(parts.value - diff.value) > 10.0 * tol) {
    std::ostringstream os;
    os.precision(17);
    os << "oracle_left_marchaud: integration-by-parts form " << parts.value << " and difference form "
       << diff.value << " disagree at t = " << t;
    throw NumericalError(os.str());
  }
  return parts;
}

OracleResult oracle_left_marchaud_difference(const SmoothFunction& x, const OrderFunction& ord, double t) {
  require_left(x.domain(), t, "oracle_left_marchaud_difference");
  const double alpha = order_at(ord, t);
  const double a = x.domain().a;
  const double d = t - a;
  constexpr int kLevels = 40;
  const double xt = x(t);
  auto f = [&](double tau) { return (xt - x(tau)) * std::pow(t - tau, -1.0 - alpha); };
  auto r = quad::integrate_graded(f, a, t, quad::SingularEnd::upper, kLevels, false);
  // Near tau = t the integrand behaves like x'(t) (t - tau)^(-alpha).
  const double h = std::ldexp(d, -kLevels);
  r.value += x.derivative(1, t) * std::pow(h, 1.0 - alpha) / (1.0 - alpha);
  const double g = gamma(1.0 - alpha);
  return {xt / (g * std::pow(d, alpha)) + alpha / g * r.value, alpha / g * r.error};
}

OracleResult oracle_left_rl_derivative(const SmoothFunction& x, const OrderFunction& ord, double t, double tol) {
  require_left(x.domain(), t, "oracle_left_rl_derivative");
  const double alpha = order_at(ord, t);
  const auto s1 = marchaud_by_parts(x, alpha, t, 0.5 * tol);
  check_error({s1.value, s1.error}, 0.5 * tol, "oracle_left_rl_derivative");
  const double dalpha = ord.deriv(t);
  if (dalpha == 0.0) return s1;

  // Logarithmic kernel: with u = (t - tau)^(1 - alpha), ln(t - tau) = ln(u) / (1 - alpha).
  const double d = t - x.domain().a;
  const double p = 1.0 / (1.0 - alpha);
  const double upper = std::pow(d, 1.0 - alpha);
  auto f = [&](double u) { return std::log(u) * x(t - std::min(std::pow(u, p), d)); };
  const double scale = dalpha / gamma(1.0 - alpha) * p * p;
  const auto r = quad::integrate(f, 0.0, upper, 0.5 * tol / std::abs(scale));
  const double s2_err = std::abs(scale) * r.error;
  return {s1.value - scale * r.value, s1.error + s2_err};
}

SmoothFunction reflect(const SmoothFunction& x) {
  const double a = x.domain().a;
  const double b = x.domain().b;
  std::vector<SmoothFunction::Fn> d;
  for (int k = 0; k <= x.max_order(); ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    d.push_back([x, k, sign, a, b](double s) { return sign * x.derivative(k, a + b - s); });
  }
  return SmoothFunction(std::move(d), x.domain());
}

OrderFunction reflect(const OrderFunction& ord) {
  const double a = ord.domain().a;
  const double b = ord.domain().b;
  if (ord.is_constant()) return OrderFunction::constant(ord(a), ord.domain());
  return OrderFunction::with_derivative([ord, a, b](double s) { return ord(a + b - s); },
                                        [ord, a, b](double s) { return -ord.deriv(a + b - s); }, ord.domain());
}

OracleResult oracle_right_rl_derivative(const SmoothFunction& x, const OrderFunction& ord, double t, double tol) {
  require_right(x.domain(), t, "oracle_right_rl_derivative");
  const auto& dom = x.domain();
  return oracle_left_rl_derivative(reflect(x), reflect(ord), dom.a + dom.b - t, tol);
}

OracleResult oracle_right_marchaud(const SmoothFunction& x, const OrderFunction& ord, double t, double tol) {
  require_right(x.domain(), t, "oracle_right_marchaud");
  const double alpha = order_at(ord, t);
  const double b = x.domain().b;
  const double d = b - t;
  const double g = gamma(1.0 - alpha);
  auto dx = [&x](double tau) { return x.derivative(1, tau); };
  const auto r = weak_kernel_integral(dx, t, d, alpha, -1.0, tol * g);
  check_error(r, tol * g, "oracle_right_marchaud");
  return {(x(b) * std::pow(d, -alpha) - r.value) / g, r.error / g};
}

}  // namespace vofrac

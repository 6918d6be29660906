#include "vofrac/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
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

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream os;
    os << "alpha = " << alpha << " outside (0, 1)";
    throw DomainError(os.str());
  }
}

double log_factorial(int k) { return log_gamma_signed(k + 1.0).log_abs; }

// Gamma(x) / (Gamma(y) * k!) with sign tracking.
double gamma_quotient(double x, double y, int k) {
  const auto gx = log_gamma_signed(x);
  const auto gy = log_gamma_signed(y);
  return gx.sign * gy.sign * std::exp(gx.log_abs - gy.log_abs - log_factorial(k));
}

// 1/Gamma(k+1-s) [1 + sum_{p=n+1-k}^{N} Gamma(p-n+s) / (Gamma(s-k) (p-n+k)!)].
// s = alpha gives the derivative coefficient, s = -alpha the integral one.
double a_coefficient(double s, int k, const ExpansionParams& params) {
  const int n = params.n;
  if (k < 0 || k > n) throw ConfigError("A coefficient requires 0 <= k <= n");
  double sum = 1.0;
  for (int p = n + 1 - k; p <= params.N; ++p) sum += gamma_quotient(p - n + s, s - k, p - n + k);
  return sum / gamma(k + 1.0 - s);
}

void require_moments(const MomentVector& m, Side side, int n, int k_max, const char* op) {
  if (m.side != side) throw ConfigError(std::string(op) + ": moments computed for the other side");
  if (m.n != n) throw ConfigError(std::string(op) + ": moments computed for a different n");
  if (m.k_max() < k_max) {
    std::ostringstream os;
    os << op << ": moments cover k <= " << m.k_max() << ", need k <= " << k_max;
    throw ConfigError(os.str());
  }
}

void require_derivatives(const SmoothFunction& x, int order, const char* op) {
  if (x.max_order() < order) {
    std::ostringstream os;
    os << op << ": x provides derivatives up to order " << x.max_order() << ", need " << order;
    throw ConfigError(os.str());
  }
}

MomentVector moments_impl(const SmoothFunction& x, Side side, double anchor, double t, int n, int k_max) {
  if (k_max < n + 1) throw ConfigError("moments: k_max must be at least n + 1");
  const double d = side == Side::left ? t - anchor : anchor - t;
  if (!(d > 0.0)) {
    std::ostringstream os;
    os << "moments: t = " << t << (side == Side::left ? " must exceed a = " : " must be below b = ") << anchor;
    throw DomainError(os.str());
  }
  const double dir = side == Side::left ? 1.0 : -1.0;
  const double xscale = std::max({std::abs(x(anchor)), std::abs(x(t)), std::abs(x(0.5 * (anchor + t))), 1e-300});

  MomentVector m{side, n, t, {}};
  m.values.reserve(static_cast<std::size_t>(k_max - n));
  for (int k = n + 1; k <= k_max; ++k) {
    const int j = k - n;
    // V_k = j d^j int_0^1 s^(j-1) x(anchor + dir s d) ds
    auto f = [&](double s) { return std::pow(s, j - 1) * x(anchor + dir * s * d); };
    const double factor = j * std::pow(d, j);
    // absolute error 1e-10 on V_k, tightened so tiny intervals keep relative accuracy
    const double tol = std::min(1e-10 / factor, 1e-13 * xscale);
    m.values.push_back(factor * quad::integrate(f, 0.0, 1.0, tol).value);
  }
  return m;
}

// d^-alpha [sum_k A_k d^k x^(k)(t) + sum_k B_k d^(n-k) M_k]
template <class CoeffA, class CoeffB>
double s1_impl(const SmoothFunction& x, double alpha, const ExpansionParams& params, double t, double d,
               const MomentVector& m, CoeffA coeff_a, CoeffB coeff_b, double d_exponent) {
  const int n = params.n;
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) sum += coeff_a(alpha, k) * std::pow(d, k) * x.derivative(k, t);
  for (int k = n + 1; k <= params.N; ++k) sum += coeff_b(alpha, k) * std::pow(d, n - k) * m[k];
  return std::pow(d, d_exponent) * sum;
}

double s2_impl(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t, double d,
               const MomentVector& m) {
  const double dalpha = ord.deriv(t);
  if (dalpha == 0.0) return 0.0;
  const double alpha = order_at(ord, t);
  const int n = params.n;
  const int N = params.N;
  const double L = std::log(d);
  const double q = 1.0 - alpha;

  std::vector<double> bs(static_cast<std::size_t>(N + 1));
  for (int k = 0; k <= N; ++k) bs[static_cast<std::size_t>(k)] = binom_signed(alpha, k);

  double bracket_x = L / q - 1.0 / (q * q);
  for (int k = 0; k <= N; ++k) {
    const double b = bs[static_cast<std::size_t>(k)];
    double inner = 0.0;
    for (int p = 1; p <= N; ++p) inner += 1.0 / (p * static_cast<double>(k + p + 1));
    bracket_x += -L * b / (k + 1.0) + b * inner;
  }

  double bracket_m = 0.0;
  for (int k = n + 1; k <= N + n + 1; ++k) {
    const double b = bs[static_cast<std::size_t>(k - n - 1)];
    bracket_m += L * b / (k - n) * std::pow(d, n - k) * m[k];
    double inner = 0.0;
    for (int p = 1; p <= N; ++p) inner += std::pow(d, n - k - p) * m[k + p] / (p * static_cast<double>(k + p - n));
    bracket_m -= b * inner;
  }
  return dalpha / gamma(q) * std::pow(d, q) * (x(t) * bracket_x + bracket_m);
}

void require_left_t(const SmoothFunction& x, double t, const char* op) {
  const auto& dom = x.domain();
  if (!(t > dom.a && t <= dom.b)) {
    std::ostringstream os;
    os << op << ": t = " << t << " outside (" << dom.a << ", " << dom.b << "]";
    throw DomainError(os.str());
  }
}

void require_right_t(const SmoothFunction& x, double t, const char* op) {
  const auto& dom = x.domain();
  if (!(t >= dom.a && t < dom.b)) {
    std::ostringstream os;
    os << op << ": t = " << t << " outside [" << dom.a << ", " << dom.b << ")";
    throw DomainError(os.str());
  }
}

double distance(const SmoothFunction& x, double t, Side side) {
  return side == Side::left ? t - x.domain().a : x.domain().b - t;
}

}  // namespace

void ExpansionParams::validate() const {
  if (n < 0) throw ConfigError("expansion: n must be non-negative");
  if (N < n + 1) {
    std::ostringstream os;
    os << "expansion: N = " << N << " must be at least n + 1 = " << n + 1;
    throw ConfigError(os.str());
  }
}

double MomentVector::operator[](int k) const {
  if (k < k_min() || k > k_max()) {
    std::ostringstream os;
    os << "moment of order " << k << " not available (have " << k_min() << ".." << k_max() << ")";
    throw ConfigError(os.str());
  }
  return values[static_cast<std::size_t>(k - n - 1)];
}

MomentVector moments_left(const SmoothFunction& x, double a, double t, int n, int k_max) {
  return moments_impl(x, Side::left, a, t, n, k_max);
}

MomentVector moments_right(const SmoothFunction& x, double b, double t, int n, int k_max) {
  return moments_impl(x, Side::right, b, t, n, k_max);
}

double coeff_A_deriv_left(double alpha, int k, const ExpansionParams& params) {
  require_alpha(alpha);
  return a_coefficient(alpha, k, params);
}

double coeff_B_deriv_left(double alpha, int k, int n) {
  require_alpha(alpha);
  if (k < n + 1) throw ConfigError("B coefficient requires k >= n + 1");
  // Gamma(k-n+alpha) / (Gamma(-alpha) Gamma(1+alpha) (k-n)!)
  return gamma_quotient(k - n + alpha, -alpha, k - n) / gamma(1.0 + alpha);
}

double coeff_A_right(double alpha, int k, const ExpansionParams& params) {
  const double a = coeff_A_deriv_left(alpha, k, params);
  return k % 2 == 0 ? a : -a;
}

// The moment terms keep the left sign: reflecting tau -> a + b - tau maps W_k onto the
// left moment of the reflected function, so no (-1)^(n+1) factor appears.
double coeff_B_right(double alpha, int k, const ExpansionParams& params) {
  return coeff_B_deriv_left(alpha, k, params.n);
}

double coeff_A_integral(double alpha, int k, const ExpansionParams& params) {
  require_alpha(alpha);
  return a_coefficient(-alpha, k, params);
}

double coeff_B_integral(double alpha, int k, const ExpansionParams& params) {
  require_alpha(alpha);
  if (k < params.n + 1) throw ConfigError("B coefficient requires k >= n + 1");
  // Gamma(k-n-alpha) / (Gamma(alpha) Gamma(1-alpha) (k-n)!)
  return gamma_quotient(k - params.n - alpha, alpha, k - params.n) / gamma(1.0 - alpha);
}

double s1_left(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t,
               const MomentVector& moments) {
  params.validate();
  require_left_t(x, t, "s1_left");
  require_derivatives(x, params.n, "s1_left");
  require_moments(moments, Side::left, params.n, params.N, "s1_left");
  const double alpha = order_at(ord, t);
  return s1_impl(
      x, alpha, params, t, t - x.domain().a, moments,
      [&](double al, int k) { return coeff_A_deriv_left(al, k, params); },
      [&](double al, int k) { return coeff_B_deriv_left(al, k, params.n); }, -alpha);
}

double s1_right(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t,
                const MomentVector& moments) {
  params.validate();
  require_right_t(x, t, "s1_right");
  require_derivatives(x, params.n, "s1_right");
  require_moments(moments, Side::right, params.n, params.N, "s1_right");
  const double alpha = order_at(ord, t);
  return s1_impl(
      x, alpha, params, t, x.domain().b - t, moments,
      [&](double al, int k) { return coeff_A_right(al, k, params); },
      [&](double al, int k) { return coeff_B_right(al, k, params); }, -alpha);
}

double s2_left(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t,
               const MomentVector& moments) {
  params.validate();
  require_left_t(x, t, "s2_left");
  require_moments(moments, Side::left, params.n, 2 * params.N + params.n + 1, "s2_left");
  return s2_impl(x, ord, params, t, t - x.domain().a, moments);
}

double s2_right(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t,
                const MomentVector& moments) {
  params.validate();
  require_right_t(x, t, "s2_right");
  require_moments(moments, Side::right, params.n, 2 * params.N + params.n + 1, "s2_right");
  return s2_impl(x, ord, params, t, x.domain().b - t, moments);
}

ApproxReport approx_left_rl_derivative(const SmoothFunction& x, const OrderFunction& ord,
                                       const ExpansionParams& params, double t) {
  params.validate();
  require_left_t(x, t, "approx_left_rl_derivative");
  require_derivatives(x, params.n + 1, "approx_left_rl_derivative");
  const auto m = moments_left(x, x.domain().a, t, params.n, 2 * params.N + params.n + 1);
  ApproxReport r;
  r.s1 = s1_left(x, ord, params, t, m);
  r.s2 = s2_left(x, ord, params, t, m);
  r.value = r.s1 - r.s2;
  r.bound_e1 = bound_e1(x, ord, params, t, Side::left);
  r.bound_e2 = bound_e2(x, ord, params, t, Side::left);
  return r;
}

ApproxReport approx_right_rl_derivative(const SmoothFunction& x, const OrderFunction& ord,
                                        const ExpansionParams& params, double t) {
  params.validate();
  require_right_t(x, t, "approx_right_rl_derivative");
  require_derivatives(x, params.n + 1, "approx_right_rl_derivative");
  const auto m = moments_right(x, x.domain().b, t, params.n, 2 * params.N + params.n + 1);
  ApproxReport r;
  r.s1 = s1_right(x, ord, params, t, m);
  r.s2 = s2_right(x, ord, params, t, m);
  r.value = r.s1 + r.s2;
  r.bound_e1 = bound_e1(x, ord, params, t, Side::right);
  r.bound_e2 = bound_e2(x, ord, params, t, Side::right);
  return r;
}

ApproxReport approx_left_integral(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params,
                                  double t) {
  params.validate();
  require_left_t(x, t, "approx_left_integral");
  require_derivatives(x, params.n + 1, "approx_left_integral");
  const auto m = moments_left(x, x.domain().a, t, params.n, params.N);
  const double alpha = order_at(ord, t);
  ApproxReport r;
  r.s1 = s1_impl(
      x, alpha, params, t, t - x.domain().a, m, [&](double al, int k) { return coeff_A_integral(al, k, params); },
      [&](double al, int k) { return coeff_B_integral(al, k, params); }, alpha);
  r.value = r.s1;
  r.bound_e1 = bound_en_integral(x, ord, params, t);
  return r;
}

ApproxReport approx_left_marchaud(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params,
                                  double t) {
  params.validate();
  require_left_t(x, t, "approx_left_marchaud");
  require_derivatives(x, params.n + 1, "approx_left_marchaud");
  const auto m = moments_left(x, x.domain().a, t, params.n, params.N);
  ApproxReport r;
  r.s1 = s1_left(x, ord, params, t, m);
  r.value = r.s1;
  r.bound_e1 = bound_e1(x, ord, params, t, Side::left);
  return r;
}

ApproxReport approx_right_marchaud(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params,
                                   double t) {
  params.validate();
  require_right_t(x, t, "approx_right_marchaud");
  require_derivatives(x, params.n + 1, "approx_right_marchaud");
  const auto m = moments_right(x, x.domain().b, t, params.n, params.N);
  ApproxReport r;
  r.s1 = s1_right(x, ord, params, t, m);
  r.value = r.s1;
  r.bound_e1 = bound_e1(x, ord, params, t, Side::right);
  return r;
}

double sup_derivative(const SmoothFunction& x, int j, double t, Side side, int samples) {
  const double lo = side == Side::left ? x.domain().a : t;
  const double hi = side == Side::left ? t : x.domain().b;
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double tau = lo + (hi - lo) * i / (samples - 1);
    best = std::max(best, std::abs(x.derivative(j, tau)));
  }
  return best;
}

double bound_e1(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t,
                Side side) {
  params.validate();
  const double alpha = order_at(ord, t);
  const double e = params.n - alpha;
  if (e <= 0.0) return std::numeric_limits<double>::infinity();
  const double L = sup_derivative(x, params.n + 1, t, side);
  if (L == 0.0) return 0.0;
  const double d = distance(x, t, side);
  return L * std::exp(e * e + e) / (gamma(params.n + 1.0 - alpha) * e * std::pow(params.N, e)) *
         std::pow(d, params.n + 1.0 - alpha);
}

double bound_e2(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params, double t,
                Side side) {
  params.validate();
  const double alpha = order_at(ord, t);
  const double dalpha = ord.deriv(t);
  if (dalpha == 0.0) return 0.0;
  const double L = sup_derivative(x, 1, t, side);
  if (L == 0.0) return 0.0;
  const double d = distance(x, t, side);
  const double N = params.N;
  return L * std::abs(dalpha) * std::pow(d, 2.0 - alpha) * std::exp(alpha * alpha - alpha) /
         (gamma(2.0 - alpha) * std::pow(N, 1.0 - alpha)) * (std::abs(std::log(d)) + 1.0 / N);
}

double bound_en_integral(const SmoothFunction& x, const OrderFunction& ord, const ExpansionParams& params,
                         double t) {
  params.validate();
  const double alpha = order_at(ord, t);
  const double e = params.n + alpha;
  const double L = sup_derivative(x, params.n + 1, t, Side::left);
  if (L == 0.0) return 0.0;
  const double d = t - x.domain().a;
  return L * std::exp(e * e + e) / (gamma(params.n + 1.0 + alpha) * e * std::pow(params.N, e)) *
         std::pow(d, params.n + 1.0 + alpha);
}

}  // namespace vofrac

#include "vofrac/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "vofrac/errors.hpp"

namespace vofrac {
namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(double x) { return x <= 0.0 && x == std::floor(x); }

// Series part of the Lanczos sum at xm = x - 1.
double lanczos_sum(double xm) {
  double s = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) s += kLanczos[i] / (xm + static_cast<double>(i));
  return s;
}

// log Gamma(x) for x >= 1/2.
double log_gamma_positive(double x) {
  const double xm = x - 1.0;
  const double t = xm + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm + 0.5) * std::log(t) - t + std::log(lanczos_sum(xm));
}

void throw_pole(const char* fn, double x) {
  std::ostringstream os;
  os << fn << ": pole at x = " << x;
  throw PoleError(os.str());
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

}  // namespace

double sin_pi(double x) {
  if (x == std::floor(x)) return 0.0;
  // Reduce to [-1, 1].
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

double gamma(double x) {
  if (std::isnan(x)) return x;
  if (is_pole(x)) throw_pole("gamma", x);
  if (x < 0.5) return std::numbers::pi / (sin_pi(x) * gamma(1.0 - x));
  if (x > 171.7) return std::numeric_limits<double>::infinity();
  const double xm = x - 1.0;
  const double t = xm + kLanczosG + 0.5;
  // Split the power so that t^(xm+1/2) does not overflow before exp(-t) is applied.
  const double half = std::pow(t, 0.5 * (xm + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * lanczos_sum(xm);
}

SignedLog log_gamma_signed(double x) {
  if (is_pole(x)) throw_pole("log_gamma_signed", x);
  if (x >= 0.5) return {log_gamma_positive(x), 1};
  // Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
  const double s = sin_pi(x);
  return {std::log(std::numbers::pi / std::abs(s)) - log_gamma_positive(1.0 - x), s > 0.0 ? 1 : -1};
}

double log_gamma_ratio(double x, double y) {
  if (x < 0.5 || y < 0.5) {
    const auto lx = log_gamma_signed(x);
    const auto ly = log_gamma_signed(y);
    return lx.log_abs - ly.log_abs;
  }
  const double xm = x - 1.0;
  const double ym = y - 1.0;
  const double tx = xm + kLanczosG + 0.5;
  const double ty = ym + kLanczosG + 0.5;
  return (ym + 0.5) * std::log1p((x - y) / ty) + (x - y) * std::log(tx) - (x - y) +
         std::log(lanczos_sum(xm) / lanczos_sum(ym));
}

double digamma(double x) {
  if (std::isnan(x)) return x;
  if (is_pole(x)) throw_pole("digamma", x);
  double result = 0.0;
  if (x < 0.5) {
    // psi(x) = psi(1 - x) - pi cot(pi x)
    result -= std::numbers::pi * cos_pi(x) / sin_pi(x);
    x = 1.0 - x;
  }
  while (x < 6.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // Asymptotic series; coefficients B_2k / (2k).
  constexpr std::array<double, 7> kTail = {1.0 / 12.0,  -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
                                           1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0};
  const double inv2 = 1.0 / (x * x);
  double term = inv2;
  double tail = 0.0;
  for (double c : kTail) {
    tail += c * term;
    term *= inv2;
  }
  return result + std::log(x) - 0.5 / x - tail;
}

double binom_signed(double alpha, int k) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream os;
    os << "binom_signed: alpha = " << alpha << " outside (0, 1)";
    throw DomainError(os.str());
  }
  if (k < 0) throw DomainError("binom_signed: negative k");
  if (k == 0) return 1.0;
  if (k <= 20) {
    double fact = 1.0;
    for (int j = 2; j <= k; ++j) fact *= j;
    return gamma(alpha + k) / (gamma(alpha) * fact);
  }
  return std::exp(log_gamma_ratio(alpha + k, k + 1.0)) / gamma(alpha);
}

OrderFunction OrderFunction::with_derivative(Fn alpha, Fn dalpha, Interval domain) {
  if (!(domain.a < domain.b)) throw ConfigError("OrderFunction: empty domain");
  return OrderFunction(std::move(alpha), std::move(dalpha), domain, false);
}

OrderFunction OrderFunction::from_values(Fn alpha, Interval domain) {
  if (!(domain.a < domain.b)) throw ConfigError("OrderFunction: empty domain");
  constexpr double h = 1e-6;
  auto d = [alpha, domain](double t) {
    const double lo = std::max(domain.a, t - h);
    const double hi = std::min(domain.b, t + h);
    return (alpha(hi) - alpha(lo)) / (hi - lo);
  };
  return OrderFunction(std::move(alpha), d, domain, false);
}

OrderFunction OrderFunction::constant(double alpha, Interval domain) {
  if (!(domain.a < domain.b)) throw ConfigError("OrderFunction: empty domain");
  return OrderFunction([alpha](double) { return alpha; }, [](double) { return 0.0; }, domain, true);
}

void OrderFunction::validate(int samples) const {
  if (samples < 2) samples = 2;
  for (int i = 0; i < samples; ++i) {
    const double t = domain_.a + domain_.length() * i / (samples - 1);
    const double v = eval_(t);
    if (!(v > 0.0 && v < 1.0)) {
      std::ostringstream os;
      os << "order alpha(" << t << ") = " << v << " outside (0, 1)";
      throw DomainError(os.str());
    }
  }
}

double OrderFunction::derivative_mismatch(int samples, double h) const {
  double worst = 0.0;
  for (int i = 1; i < samples - 1; ++i) {
    const double t = domain_.a + domain_.length() * i / (samples - 1);
    const double fd = (eval_(t + h) - eval_(t - h)) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - deriv_(t)));
  }
  return worst;
}

OrderFunction OrderFunction::shifted(double beta) const {
  auto f = eval_;
  return OrderFunction([f, beta](double t) { return f(t) + beta; }, deriv_, domain_, constant_);
}

}  // namespace vofrac

#pragma once

#include <cmath>
#include <vector>

#include "vofrac/reference.hpp"

namespace support {

inline const vofrac::Interval kUnit{0.0, 1.0};

// c * (t - shift)^m with all derivatives, optionally mirrored: c * (shift - t)^m.
inline vofrac::SmoothFunction monomial(int m, double c = 1.0, double shift = 0.0, bool mirrored = false,
                                       vofrac::Interval dom = kUnit, int max_order = 8) {
  std::vector<vofrac::SmoothFunction::Fn> d;
  for (int k = 0; k <= max_order; ++k) {
    double coef = c;
    for (int j = 0; j < k; ++j) coef *= (m - j) * (mirrored ? -1.0 : 1.0);
    const int e = m - k;
    d.push_back([coef, e, shift, mirrored](double t) {
      if (coef == 0.0 || e < 0) return 0.0;
      return coef * std::pow(mirrored ? shift - t : t - shift, e);
    });
  }
  return vofrac::SmoothFunction(std::move(d), dom);
}

inline vofrac::SmoothFunction constant(double c, vofrac::Interval dom = kUnit) { return monomial(0, c, 0.0, false, dom); }

// exp(t) * sin(3t): a non-polynomial test function.
inline vofrac::SmoothFunction wiggle(vofrac::Interval dom = kUnit) {
  std::vector<vofrac::SmoothFunction::Fn> d;
  for (int k = 0; k <= 8; ++k) {
    // d^k/dt^k e^t sin(3t) = 10^(k/2) e^t sin(3t + k*atan(3))
    const double r = std::pow(10.0, 0.5 * k);
    const double phase = k * std::atan(3.0);
    d.push_back([r, phase](double t) { return r * std::exp(t) * std::sin(3.0 * t + phase); });
  }
  return vofrac::SmoothFunction(std::move(d), dom);
}

inline std::vector<double> tenth_grid() {
  std::vector<double> t;
  for (int i = 1; i <= 10; ++i) t.push_back(i / 10.0);
  return t;
}

}  // namespace support

#include "vofrac/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vofrac/errors.hpp"

namespace vofrac {

const State& Trajectory::at(double time, double tol) const {
  // Samples are sorted in time.
  auto it = std::lower_bound(t.begin(), t.end(), time - tol);
  if (it != t.end() && std::abs(*it - time) <= tol) return states[static_cast<std::size_t>(it - t.begin())];
  std::ostringstream os;
  os << "trajectory has no sample at t = " << time;
  throw DomainError(os.str());
}

void Trajectory::append(const Trajectory& other) {
  std::size_t first = 0;
  if (!t.empty() && !other.t.empty() && other.t.front() == t.back()) {
    first = 1;
    on_grid.back() = on_grid.back() || other.on_grid.front();
  }
  for (std::size_t i = first; i < other.size(); ++i) {
    t.push_back(other.t[i]);
    states.push_back(other.states[i]);
    rates.push_back(other.rates[i]);
    on_grid.push_back(other.on_grid[i]);
  }
}

Trajectory integrate_rk4(const OdeRhs& rhs, double origin, double t0, const State& y0, double t_end,
                         const Rk4Options& options) {
  if (!(options.step > 0.0)) throw ConfigError("integrate_rk4: step must be positive");
  if (!(t_end >= t0)) throw ConfigError("integrate_rk4: t_end before t0");
  const double step = options.step;
  const double snap = 1e-9 * step;

  auto mark = [&](long j) { return origin + static_cast<double>(j) * step; };
  auto is_mark = [&](double time) {
    const double j = std::round((time - origin) / step);
    return std::abs(time - mark(static_cast<long>(j))) <= snap;
  };
  long next = static_cast<long>(std::floor((t0 - origin) / step)) + 1;
  while (mark(next) <= t0 + snap) ++next;

  auto check = [](double time, const State& y) {
    if (!y.allFinite()) {
      std::ostringstream os;
      os << "non-finite state at t = " << time;
      throw NumericalError(os.str());
    }
  };

  Trajectory out;
  double t = t0;
  State y = y0;
  State k1 = rhs(t, y);
  check(t, k1);
  out.t.push_back(t);
  out.states.push_back(y);
  out.rates.push_back(k1);
  out.on_grid.push_back(is_mark(t));

  while (t_end - t > snap) {
    double target = std::min(mark(next), t_end);
    double h = target - t;
    bool landed = true;
    const double graded = options.graded_ratio * (t - origin);
    // Within half a graded step of the target, land on it rather than leave a sliver.
    if (graded > 0.0 && 1.5 * graded < h) {
      h = graded;
      landed = false;
    }
    const State k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1);
    const State k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2);
    const State k4 = rhs(t + h, y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (landed) {
      t = target;
      if (target == mark(next)) ++next;
    } else {
      t += h;
    }
    check(t, y);
    k1 = rhs(t, y);
    check(t, k1);
    out.t.push_back(t);
    out.states.push_back(y);
    out.rates.push_back(k1);
    out.on_grid.push_back(is_mark(t));
  }
  return out;
}

}  // namespace vofrac

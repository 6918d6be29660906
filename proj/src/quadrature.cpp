#include "vofrac/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "vofrac/errors.hpp"

namespace vofrac::quad {
namespace {

using boost::math::quadrature::gauss_kronrod;

QuadResult panel31(const Integrand& f, double lo, double hi) {
  QuadResult r;
  r.value = gauss_kronrod<double, 31>::integrate(f, lo, hi, 0, 0.0, &r.error);
  r.error *= 0.5 * std::abs(hi - lo);  // Boost reports the estimate on the reference interval [-1, 1]
  return r;
}

QuadResult panel21(const Integrand& f, double lo, double hi) {
  QuadResult r;
  r.value = gauss_kronrod<double, 21>::integrate(f, lo, hi, 0, 0.0, &r.error);
  r.error *= 0.5 * std::abs(hi - lo);  // Boost reports the estimate on the reference interval [-1, 1]
  return r;
}

struct Panel {
  double lo, hi;
  QuadResult r;
  int depth;
  bool operator<(const Panel& o) const { return r.error < o.r.error; }
};

constexpr int kMaxSplits = 4000;

}  // namespace

QuadResult integrate(const Integrand& f, double lo, double hi, double abs_tol, int max_depth) {
  if (lo == hi) return {};
  std::priority_queue<Panel> open;
  QuadResult total = panel31(f, lo, hi);
  open.push({lo, hi, total, 0});
  QuadResult settled;  // panels that reached max_depth
  for (int splits = 0; total.error > abs_tol && !open.empty() && splits < kMaxSplits; ++splits) {
    const Panel worst = open.top();
    open.pop();
    if (worst.depth >= max_depth) {
      settled.value += worst.r.value;
      settled.error += worst.r.error;
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left{worst.lo, mid, panel31(f, worst.lo, mid), worst.depth + 1};
    const Panel right{mid, worst.hi, panel31(f, mid, worst.hi), worst.depth + 1};
    total.value += left.r.value + right.r.value - worst.r.value;
    total.error += left.r.error + right.r.error - worst.r.error;
    open.push(left);
    open.push(right);
  }
  // Re-sum to shed the rounding accumulated by the running updates.
  QuadResult r = settled;
  while (!open.empty()) {
    r.value += open.top().r.value;
    r.error += open.top().r.error;
    open.pop();
  }
  if (!std::isfinite(r.value) || r.error > abs_tol)
    throw QuadratureError("adaptive quadrature did not reach the requested tolerance", r.error);
  return r;
}

QuadResult integrate_graded(const Integrand& f, double lo, double hi, SingularEnd end, int levels, bool remainder) {
  if (lo == hi) return {};
  QuadResult total;
  const double width = hi - lo;
  double outer = 1.0;  // fraction of the interval still to cover, measured from the singular end
  const int panels = remainder ? levels + 1 : levels;
  for (int j = 0; j < panels; ++j) {
    const double inner = (j == levels) ? 0.0 : 0.5 * outer;
    double p0, p1;
    if (end == SingularEnd::upper) {
      p0 = hi - outer * width;
      p1 = hi - inner * width;
    } else {
      p0 = lo + inner * width;
      p1 = lo + outer * width;
    }
    const auto r = panel21(f, p0, p1);
    total.value += r.value;
    total.error += r.error;
    outer = inner;
  }
  if (!std::isfinite(total.value)) throw QuadratureError("graded quadrature produced a non-finite value", total.error);
  return total;
}

double simpson(std::span<const double> values, double h) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (values[0] + values[1]);
  const std::size_t intervals = n - 1;
  std::size_t simpson_end = intervals % 2 == 0 ? n - 1 : n - 4;  // last index covered by 1/3 rule
  double s = 0.0;
  if (simpson_end > 0) {
    double acc = values[0] + values[simpson_end];
    for (std::size_t i = 1; i < simpson_end; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * values[i];
    s = acc * h / 3.0;
  }
  if (intervals % 2 == 1) {
    const std::size_t i = simpson_end;
    s += 3.0 * h / 8.0 * (values[i] + 3.0 * values[i + 1] + 3.0 * values[i + 2] + values[i + 3]);
  }
  return s;
}

double simpson(std::span<const double> t, std::span<const double> values) {
  if (t.size() != values.size()) throw std::invalid_argument("simpson: size mismatch");
  const std::size_t n = t.size();
  if (n < 2) return 0.0;
  double s = 0.0;
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    const double h0 = t[i + 1] - t[i];
    const double h1 = t[i + 2] - t[i + 1];
    const double hs = h0 + h1;
    s += hs / 6.0 *
         ((2.0 - h1 / h0) * values[i] + hs * hs / (h0 * h1) * values[i + 1] + (2.0 - h0 / h1) * values[i + 2]);
  }
  if (i + 1 < n) {
    // Trailing interval: parabola through the last three points, integrated over the last interval.
    if (n >= 3) {
      const double h0 = t[n - 2] - t[n - 3];
      const double h1 = t[n - 1] - t[n - 2];
      const double w2 = (2.0 * h1 * h1 + 3.0 * h0 * h1) / (6.0 * (h0 + h1));
      const double w1 = (h1 * h1 + 3.0 * h0 * h1) / (6.0 * h0);
      const double w0 = -h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
      s += w0 * values[n - 3] + w1 * values[n - 2] + w2 * values[n - 1];
    } else {
      s += 0.5 * (t[1] - t[0]) * (values[0] + values[1]);
    }
  }
  return s;
}

}  // namespace vofrac::quad

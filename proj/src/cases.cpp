#include "vofrac/cases.hpp"

#include <cmath>

#include "vofrac/errors.hpp"

namespace vofrac::cases {
namespace {

constexpr Interval kUnit{0.0, 1.0};

// t^4 and its derivatives up to order 8.
SmoothFunction quartic() {
  std::vector<SmoothFunction::Fn> d = {
      [](double t) { return t * t * t * t; }, [](double t) { return 4.0 * t * t * t; },
      [](double t) { return 12.0 * t * t; },  [](double t) { return 24.0 * t; },
      [](double) { return 24.0; },
  };
  for (int k = 5; k <= 8; ++k) d.push_back([](double) { return 0.0; });
  return SmoothFunction(std::move(d), kUnit);
}

[[noreturn]] void unknown(const std::string& kind, const std::string& name, const std::vector<std::string>& known) {
  std::string msg = "unknown " + kind + " case '" + name + "' (known:";
  for (const auto& k : known) msg += " " + k;
  throw ConfigError(msg + ")");
}

}  // namespace

OrderFunction linear_order() {
  return OrderFunction::with_derivative([](double t) { return (t + 1.0) / 4.0; }, [](double) { return 0.25; },
                                        kUnit);
}

double linear_order_source(double t) { return std::pow(t, (3.0 - t) / 4.0) / gamma((7.0 - t) / 4.0); }

OperatorCase operator_case(const std::string& name) {
  if (name == "t4-variable") return {name, quartic(), linear_order(), PowerFunction{4.0, 0.0}};
  if (name == "t4-constant") return {name, quartic(), OrderFunction::constant(0.5, kUnit), PowerFunction{4.0, 0.0}};
  unknown("operator", name, operator_case_names());
}

FdeCase fde_case(const std::string& name) {
  if (name == "fde-linear") {
    LinearFdeProblem p{linear_order(), [](double t) { return linear_order_source(t) + t; }, 1.0, 0.0, 0.0, 1.0};
    return {name, p, [](double t) { return t; }};
  }
  unknown("fde", name, fde_case_names());
}

VarminCase varmin_case(const std::string& name) {
  if (name == "varmin-tracking") {
    TrackingVariationalProblem p{linear_order(), linear_order_source, 0.0, 1.0, 0.0, 1.0};
    return {name, p, [](double t) { return t; }};
  }
  unknown("varmin", name, varmin_case_names());
}

std::vector<std::string> operator_case_names() { return {"t4-variable", "t4-constant"}; }
std::vector<std::string> fde_case_names() { return {"fde-linear"}; }
std::vector<std::string> varmin_case_names() { return {"varmin-tracking"}; }

}  // namespace vofrac::cases

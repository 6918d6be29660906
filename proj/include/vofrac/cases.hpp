#pragma once

// Built-in test cases addressable by name from the command line.
//
//   t4-variable   x(t) = t^4 on [0, 1], alpha(t) = (t + 1) / 4
//   t4-constant   x(t) = t^4 on [0, 1], alpha = 1/2
//   fde-linear    D^alpha x + x = t^((3-t)/4) / Gamma((7-t)/4) + t, x(0) = 0; solution x = t
//   varmin-tracking
//                 minimize int_0^1 [D^alpha x - t^((3-t)/4) / Gamma((7-t)/4)]^2 dt,
//                 x(0) = 0, x(1) = 1; minimizer x = t

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vofrac/fde.hpp"
#include "vofrac/reference.hpp"
#include "vofrac/variational.hpp"

namespace vofrac::cases {

/// alpha(t) = (t + 1) / 4 on [0, 1].
OrderFunction linear_order();

/// g(t) = t^((3-t)/4) / Gamma((7-t)/4), the Marchaud derivative of x = t under linear_order().
double linear_order_source(double t);

struct OperatorCase {
  std::string name;
  SmoothFunction x;
  OrderFunction ord;
  std::optional<PowerFunction> power;  // set when closed forms apply
};

struct FdeCase {
  std::string name;
  LinearFdeProblem problem;
  std::function<double(double)> exact;
};

struct VarminCase {
  std::string name;
  TrackingVariationalProblem problem;
  std::function<double(double)> exact;
};

/// Throws ConfigError for unknown names.
OperatorCase operator_case(const std::string& name);
FdeCase fde_case(const std::string& name);
VarminCase varmin_case(const std::string& name);

std::vector<std::string> operator_case_names();
std::vector<std::string> fde_case_names();
std::vector<std::string> varmin_case_names();

}  // namespace vofrac::cases

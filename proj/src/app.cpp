#include "vofrac/app.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "vofrac/cases.hpp"
#include "vofrac/errors.hpp"
#include "vofrac/expansion.hpp"
#include "vofrac/fde.hpp"
#include "vofrac/quadrature.hpp"
#include "vofrac/reference.hpp"
#include "vofrac/variational.hpp"

namespace vofrac::app {
namespace {

bool is_operator_command(Command c) {
  return c == Command::exact || c == Command::oracle || c == Command::approx || c == Command::compare;
}

std::vector<double> grid_points(const Grid& g) {
  std::vector<double> t(static_cast<std::size_t>(g.points));
  for (int i = 0; i < g.points; ++i) t[static_cast<std::size_t>(i)] = g.t_min + (g.t_max - g.t_min) * i / (g.points - 1);
  return t;
}

double exact_value(const cases::OperatorCase& c, Operator op, double t) {
  const auto& p = *c.power;
  switch (op) {
    case Operator::ileft: return power_left_integral(p, c.ord, t);
    case Operator::dleft_rl: return power_left_rl_derivative(p, c.ord, t);
    case Operator::dleft_marchaud: return power_left_marchaud(p, c.ord, t);
    default: throw ConfigError("no closed form for operator " + operator_name(op));
  }
}

OracleResult oracle_value(const cases::OperatorCase& c, Operator op, double t, double tol) {
  switch (op) {
    case Operator::ileft: return oracle_left_integral(c.x, c.ord, t, tol);
    case Operator::iright: return oracle_right_integral(c.x, c.ord, t, tol);
    case Operator::dleft_rl: return oracle_left_rl_derivative(c.x, c.ord, t, tol);
    case Operator::dright_rl: return oracle_right_rl_derivative(c.x, c.ord, t, tol);
    case Operator::dleft_marchaud: return oracle_left_marchaud(c.x, c.ord, t, tol);
    case Operator::dright_marchaud: return oracle_right_marchaud(c.x, c.ord, t, tol);
  }
  throw ConfigError("unknown operator");
}

ApproxReport approx_value(const cases::OperatorCase& c, Operator op, const ExpansionParams& params, double t) {
  switch (op) {
    case Operator::ileft: return approx_left_integral(c.x, c.ord, params, t);
    case Operator::dleft_rl: return approx_left_rl_derivative(c.x, c.ord, params, t);
    case Operator::dright_rl: return approx_right_rl_derivative(c.x, c.ord, params, t);
    case Operator::dleft_marchaud: return approx_left_marchaud(c.x, c.ord, params, t);
    case Operator::dright_marchaud: return approx_right_marchaud(c.x, c.ord, params, t);
    case Operator::iright: break;
  }
  throw ConfigError("no expansion is available for operator " + operator_name(op));
}

void set_precision(std::ostream& os) { os << std::setprecision(17); }

void validate_order(const OrderFunction& ord) {
  try {
    ord.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

Operator parse_operator(const std::string& name) {
  if (name == "ileft") return Operator::ileft;
  if (name == "iright") return Operator::iright;
  if (name == "dleft-rl") return Operator::dleft_rl;
  if (name == "dright-rl") return Operator::dright_rl;
  if (name == "dleft-marchaud") return Operator::dleft_marchaud;
  if (name == "dright-marchaud") return Operator::dright_marchaud;
  throw ConfigError("unknown operator '" + name + "'");
}

std::string operator_name(Operator op) {
  switch (op) {
    case Operator::ileft: return "ileft";
    case Operator::iright: return "iright";
    case Operator::dleft_rl: return "dleft-rl";
    case Operator::dright_rl: return "dright-rl";
    case Operator::dleft_marchaud: return "dleft-marchaud";
    case Operator::dright_marchaud: return "dright-marchaud";
  }
  return "?";
}

bool is_left(Operator op) {
  return op == Operator::ileft || op == Operator::dleft_rl || op == Operator::dleft_marchaud;
}

Grid parse_grid(const std::string& spec) {
  std::istringstream is(spec);
  Grid g{};
  char c1 = 0, c2 = 0;
  if (!(is >> g.t_min >> c1 >> g.t_max >> c2 >> g.points) || c1 != ':' || c2 != ':' || !is.eof())
    throw ConfigError("grid must look like MIN:MAX:POINTS, got '" + spec + "'");
  return g;
}

std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> out;
  std::istringstream is(spec);
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("expected a comma separated integer list, got '" + spec + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty integer list");
  return out;
}

RunConfig resolve(const RunConfig& config) {
  RunConfig c = config;
  if (!(c.tol > 0.0)) throw ConfigError("tol must be positive");
  if (!(c.step > 0.0)) throw ConfigError("step must be positive");
  if (!(c.eps > 0.0)) throw ConfigError("eps must be positive");
  if (!(c.delta >= 0.0)) throw ConfigError("delta must be non-negative");

  if (is_operator_command(c.command)) {
    if (c.case_name.empty()) c.case_name = "t4-variable";
    const auto oc = cases::operator_case(c.case_name);
    validate_order(oc.ord);
    const auto& dom = oc.x.domain();
    if (!c.grid) {
      c.grid = is_left(c.op) ? Grid{dom.a + c.delta, dom.b, 1001} : Grid{dom.a, dom.b - c.delta, 1001};
    }
    const Grid& g = *c.grid;
    if (g.points < 2) throw ConfigError("grid needs at least 2 points");
    if (!(g.t_min < g.t_max)) throw ConfigError("grid needs MIN < MAX");
    if (is_left(c.op) && !(g.t_min > dom.a && g.t_max <= dom.b))
      throw ConfigError("left operators need a < MIN and MAX <= b");
    if (!is_left(c.op) && !(g.t_min >= dom.a && g.t_max < dom.b))
      throw ConfigError("right operators need a <= MIN and MAX < b");

    if (c.command == Command::exact && (!oc.power || !is_left(c.op)))
      throw ConfigError("closed forms exist only for left operators on power-function cases");
    if (c.command == Command::compare && !c.oracle_reference && (!oc.power || !is_left(c.op)))
      c.oracle_reference = true;
    if ((c.command == Command::approx || c.command == Command::compare) && c.op == Operator::iright)
      throw ConfigError("no expansion is available for operator iright");
    if (c.command == Command::approx || c.command == Command::compare) {
      if (c.Ns.empty()) c.Ns = {3, 5};
      for (int N : c.Ns) ExpansionParams{c.n, N}.validate();
      if (oc.x.max_order() < c.n + 1) throw ConfigError("case provides too few derivatives for this n");
    }
  } else {
    if (c.Ns.empty()) c.Ns = {c.command == Command::fde ? 3 : 2};
    if (c.Ns.size() != 1) throw ConfigError("fde and varmin take a single N");
    // The reduction uses the n = 1 expansion.
    ExpansionParams{1, c.Ns.front()}.validate();
    if (c.command == Command::fde) {
      if (c.case_name.empty()) c.case_name = "fde-linear";
      const auto fc = cases::fde_case(c.case_name);
      validate_order(fc.problem.ord);
      if (!(c.eps < fc.problem.horizon - fc.problem.a)) throw ConfigError("eps beyond the horizon");
    } else {
      if (c.case_name.empty()) c.case_name = "varmin-tracking";
      const auto vc = cases::varmin_case(c.case_name);
      validate_order(vc.problem.ord);
      if (!(c.eps < vc.problem.b - vc.problem.a)) throw ConfigError("eps beyond the interval");
    }
  }
  return c;
}

std::vector<Metric> run(const RunConfig& config, std::ostream& csv) {
  const RunConfig c = resolve(config);
  std::ofstream file;
  std::ostream* os = &csv;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) throw ConfigError("cannot open output file " + c.out);
    os = &file;
  }
  switch (c.command) {
    case Command::exact: return run_exact(c, *os);
    case Command::oracle: return run_oracle(c, *os);
    case Command::approx: return run_approx(c, *os);
    case Command::compare: return run_compare(c, *os);
    case Command::fde: return run_fde(c, *os);
    case Command::varmin: return run_varmin(c, *os);
  }
  return {};
}

std::vector<Metric> run_exact(const RunConfig& config, std::ostream& csv) {
  const RunConfig c = resolve(config);
  const auto oc = cases::operator_case(c.case_name);
  set_precision(csv);
  csv << "t,exact\n";
  for (double t : grid_points(*c.grid)) csv << t << ',' << exact_value(oc, c.op, t) << '\n';
  return {};
}

std::vector<Metric> run_oracle(const RunConfig& config, std::ostream& csv) {
  const RunConfig c = resolve(config);
  const auto oc = cases::operator_case(c.case_name);
  set_precision(csv);
  csv << "t,oracle,error_estimate\n";
  double worst = 0.0;
  for (double t : grid_points(*c.grid)) {
    const auto r = oracle_value(oc, c.op, t, c.tol);
    worst = std::max(worst, r.error);
    csv << t << ',' << r.value << ',' << r.error << '\n';
  }
  return {{"max_error_estimate", worst}};
}

std::vector<Metric> run_approx(const RunConfig& config, std::ostream& csv) {
  const RunConfig c = resolve(config);
  const auto oc = cases::operator_case(c.case_name);
  set_precision(csv);
  csv << 't';
  for (int N : c.Ns) csv << ",approx_N" << N << ",bound_N" << N;
  csv << '\n';
  for (double t : grid_points(*c.grid)) {
    csv << t;
    for (int N : c.Ns) {
      const auto r = approx_value(oc, c.op, {c.n, N}, t);
      csv << ',' << r.value << ',' << r.bound();
    }
    csv << '\n';
  }
  return {};
}

double error_norm(const std::vector<double>& f, const std::vector<double>& g, double h) {
  if (f.size() != g.size()) throw ConfigError("error_norm: size mismatch");
  std::vector<double> sq(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) sq[i] = (f[i] - g[i]) * (f[i] - g[i]);
  return std::sqrt(quad::simpson(sq, h));
}

std::vector<Metric> run_compare(const RunConfig& config, std::ostream& csv) {
  const RunConfig c = resolve(config);
  const auto oc = cases::operator_case(c.case_name);
  const auto ts = grid_points(*c.grid);
  std::vector<double> reference;
  reference.reserve(ts.size());
  for (double t : ts)
    reference.push_back(c.oracle_reference ? oracle_value(oc, c.op, t, c.tol).value : exact_value(oc, c.op, t));

  std::vector<std::vector<double>> approx(c.Ns.size());
  for (std::size_t j = 0; j < c.Ns.size(); ++j) {
    const ExpansionParams params{c.n, c.Ns[j]};
    for (double t : ts) approx[j].push_back(approx_value(oc, c.op, params, t).value);
  }

  set_precision(csv);
  csv << "t," << (c.oracle_reference ? "oracle" : "exact");
  for (int N : c.Ns) csv << ",approx_N" << N;
  csv << '\n';
  for (std::size_t i = 0; i < ts.size(); ++i) {
    csv << ts[i] << ',' << reference[i];
    for (const auto& col : approx) csv << ',' << col[i];
    csv << '\n';
  }

  const double h = (c.grid->t_max - c.grid->t_min) / (c.grid->points - 1);
  std::vector<Metric> metrics;
  for (std::size_t j = 0; j < c.Ns.size(); ++j)
    metrics.push_back({"E_N" + std::to_string(c.Ns[j]), error_norm(reference, approx[j], h)});
  return metrics;
}

std::vector<Metric> run_fde(const RunConfig& config, std::ostream& csv) {
  const RunConfig c = resolve(config);
  const auto fc = cases::fde_case(c.case_name);
  const int N = c.Ns.front();
  const auto traj = solve_ivp(reduce(fc.problem, N), c.eps, c.step);

  set_precision(csv);
  csv << "t,x,exact,deviation\n";
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    if (!traj.on_grid[i]) continue;
    const double t = traj.t[i];
    const double x = traj.states[i][0];
    const double dev = x - fc.exact(t);
    worst = std::max(worst, std::abs(dev));
    csv << t << ',' << x << ',' << fc.exact(t) << ',' << dev << '\n';
  }
  return {{"max_deviation", worst}, {"x_end", traj.states.back()[0]}};
}

std::vector<Metric> run_varmin(const RunConfig& config, std::ostream& csv) {
  const RunConfig c = resolve(config);
  const auto vc = cases::varmin_case(c.case_name);
  const int N = c.Ns.front();
  ShootingOptions opts;
  opts.start_eps = c.eps;
  opts.step = c.step;
  const auto res = shoot(build_pontryagin(vc.problem, N), vc.problem, opts);
  if (!res.converged) {
    std::ostringstream os;
    os << "shooting did not converge after " << res.iterations << " Newton iterations (residual "
       << res.residual_norm << ")";
    throw NumericalError(os.str());
  }
  const auto& traj = res.trajectory;

  set_precision(csv);
  csv << "t,x,exact,deviation";
  for (int k = 1; k <= N; ++k) csv << ",lambda" << k;
  csv << '\n';
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    if (!traj.on_grid[i]) continue;
    const double t = traj.t[i];
    const auto& y = traj.states[i];
    const double dev = y[0] - vc.exact(t);
    worst = std::max(worst, std::abs(dev));
    csv << t << ',' << y[0] << ',' << vc.exact(t) << ',' << dev;
    for (int k = 0; k < N; ++k) csv << ',' << y[N + k];
    csv << '\n';
  }
  return {{"J_tilde", evaluate_functional(traj, vc.problem, N)},
          {"newton_iterations", static_cast<double>(res.iterations)},
          {"residual_norm", res.residual_norm},
          {"max_deviation", worst}};
}

}  // namespace vofrac::app

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "vofrac/app.hpp"
#include "vofrac/errors.hpp"

namespace app = vofrac::app;

int main(int argc, char** argv) {
  CLI::App cli{"Variable-order fractional operators: expansions, oracles and solvers"};
  cli.require_subcommand(1);

  app::RunConfig cfg;
  std::string op = "dleft-rl";
  std::string Ns;
  std::string grid;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--case", cfg.case_name, "built-in case name");
    sub->add_option("--out", cfg.out, "write CSV to this file instead of stdout");
    sub->add_option("--step", cfg.step, "integration step");
    sub->add_option("--tol", cfg.tol, "oracle absolute tolerance");
  };
  auto add_operator = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--op", op,
                    "ileft | iright | dleft-rl | dright-rl | dleft-marchaud | dright-marchaud");
    sub->add_option("--grid", grid, "MIN:MAX:POINTS");
    sub->add_option("--delta", cfg.delta, "gap kept from the singular endpoint on the default grid");
  };
  auto add_expansion = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of kept derivative terms");
    sub->add_option("--N", Ns, "comma separated truncation orders, e.g. 3,5");
  };
  auto add_solver = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--N", Ns, "truncation order");
    sub->add_option("--eps", cfg.eps, "offset of the start point from a");
  };

  auto* exact = cli.add_subcommand("exact", "closed-form values for power-function cases");
  add_operator(exact);
  auto* oracle = cli.add_subcommand("oracle", "adaptive quadrature reference values");
  add_operator(oracle);
  auto* approx = cli.add_subcommand("approx", "truncated expansion with error bounds");
  add_operator(approx);
  add_expansion(approx);
  auto* compare = cli.add_subcommand("compare", "expansion against the reference, with E norms");
  add_operator(compare);
  add_expansion(compare);
  compare->add_flag("--oracle", cfg.oracle_reference, "use the quadrature oracle as the reference");
  auto* fde = cli.add_subcommand("fde", "solve the linear variable-order FDE through its ODE reduction");
  add_solver(fde);
  auto* varmin = cli.add_subcommand("varmin", "solve the tracking variational problem by shooting");
  add_solver(varmin);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? app::kExitOk : app::kExitConfig;
  }

  try {
    if (exact->parsed()) cfg.command = app::Command::exact;
    else if (oracle->parsed()) cfg.command = app::Command::oracle;
    else if (approx->parsed()) cfg.command = app::Command::approx;
    else if (compare->parsed()) cfg.command = app::Command::compare;
    else if (fde->parsed()) cfg.command = app::Command::fde;
    else cfg.command = app::Command::varmin;

    cfg.op = app::parse_operator(op);
    if (!Ns.empty()) cfg.Ns = app::parse_int_list(Ns);
    if (!grid.empty()) cfg.grid = app::parse_grid(grid);

    const auto metrics = app::run(cfg, std::cout);
    std::cout.precision(17);
    for (const auto& m : metrics) std::cout << m.name << ',' << m.value << '\n';
    return app::kExitOk;
  } catch (const vofrac::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return app::kExitConfig;
  } catch (const vofrac::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return app::kExitConfig;
  } catch (const vofrac::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return app::kExitNumerical;
  }
}

#pragma once

// Command implementations behind the `vofrac` executable. Each command writes a CSV table
// (header row, comma separated, 17 significant digits) and returns scalar metrics.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vofrac::app {

enum class Command { exact, oracle, approx, compare, fde, varmin };
enum class Operator { ileft, iright, dleft_rl, dright_rl, dleft_marchaud, dright_marchaud };

Operator parse_operator(const std::string& name);
std::string operator_name(Operator op);
bool is_left(Operator op);

struct Grid {
  double t_min;
  double t_max;
  int points;
};

/// Parses "MIN:MAX:POINTS".
Grid parse_grid(const std::string& spec);

/// Parses a comma separated list of integers, e.g. "3,5".
std::vector<int> parse_int_list(const std::string& spec);

struct RunConfig {
  Command command = Command::compare;
  Operator op = Operator::dleft_rl;
  int n = 2;
  std::vector<int> Ns;  // empty: per-command default
  std::optional<Grid> grid;
  double eps = 1e-6;    // singular-start offset for fde / varmin
  double delta = 1e-3;  // distance kept from the singular endpoint on operator grids
  double step = 1e-3;
  double tol = 1e-8;
  bool oracle_reference = false;  // compare against the quadrature oracle instead of closed forms
  std::string case_name;          // empty: per-command default
  std::string out;                // empty: CSV to the caller's stream
};

struct Metric {
  std::string name;
  double value;
};

/// Per-command defaults filled in and every field checked. Throws ConfigError.
RunConfig resolve(const RunConfig& config);

/// Runs a resolved or unresolved config, writing the CSV to `csv`.
/// Throws ConfigError (exit code 2) or NumericalError (exit code 3).
std::vector<Metric> run(const RunConfig& config, std::ostream& csv);

std::vector<Metric> run_exact(const RunConfig& config, std::ostream& csv);
std::vector<Metric> run_oracle(const RunConfig& config, std::ostream& csv);
std::vector<Metric> run_approx(const RunConfig& config, std::ostream& csv);
std::vector<Metric> run_compare(const RunConfig& config, std::ostream& csv);
std::vector<Metric> run_fde(const RunConfig& config, std::ostream& csv);
std::vector<Metric> run_varmin(const RunConfig& config, std::ostream& csv);

/// E(f, g) = sqrt(int (f - g)^2 dt) by composite Simpson on a uniform grid of spacing h.
double error_norm(const std::vector<double>& f, const std::vector<double>& g, double h);

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

}  // namespace vofrac::app

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lechain/ed.hpp"
#include "lechain/model.hpp"

namespace lechain::cli {

enum class Command { Correlators, Figure, LESearch, ConcurrenceTable };
enum class Format { CSV, JSON };
enum class StateKind { Ground, GHZ };

/// Exit status of the command-line tool.
enum ExitCode : int { Ok = 0, InvalidConfig = 2, NumericalFailure = 3, IOFailure = 4 };

/// Raised for configurations the commands cannot honour.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  std::vector<double> points() const;
};

/// "start:stop:count" with count >= 1 and start <= stop (start == stop iff count == 1).
Grid parse_grid(const std::string& text);

struct RunConfig {
  Command command = Command::Correlators;
  Family family = Family::XXX;
  std::vector<double> etas;
  double field = 0.0;
  long n_min = 1;
  long n_max = 10;
  std::optional<Grid> grid;
  int order = 200;
  std::uint64_t seed = 0;
  Format format = Format::CSV;
  std::optional<std::string> out;

  int which = 1;

  int sites = 6;
  std::optional<std::pair<int, int>> pair;
  Boundary boundary = Boundary::Periodic;
  StateKind state = StateKind::Ground;
  int restarts = 32;
};

/// Checks cross-field invariants; throws ConfigError.
void validate(const RunConfig& config);

/// Empty, integer, real, flag, text or a list of reals.
using Cell = std::variant<std::monostate, long, double, bool, std::string, std::vector<double>>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// One line per skipped point, also echoed to stderr by the driver.
  std::vector<std::string> warnings;

  void add(std::vector<Cell> row);
};

Table cmd_correlators(const RunConfig& config);
Table cmd_figure(const RunConfig& config);
Table cmd_le_search(const RunConfig& config);
Table cmd_concurrence_table(const RunConfig& config);
Table run(const RunConfig& config);

/// 12 significant digits, scientific below 1e-4.
std::string format_number(double x);

void write_csv(const Table& table, std::ostream& os);
/// Object of column-name -> array, in column order.
void write_json(const Table& table, std::ostream& os);
void write(const Table& table, Format format, std::ostream& os);

}  // namespace lechain::cli

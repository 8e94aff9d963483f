#pragma once

// Tabular reports and their CSV / JSON serializations.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cli/config.hpp"
#include "json.hpp"

namespace nt::cli {

// Missing values (std::monostate) become empty CSV fields and JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

struct Report {
  std::string command;     // e.g. "experiment hl"
  nlohmann::json params;   // the command's own parameters
  Table table;
  std::optional<double> wall_seconds;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double x);  // 17 significant digits
std::string csv_escape(const std::string& field);

void write_csv(std::ostream& out, const Table& table);
nlohmann::json to_json(const Report& report, const RunConfig& config);

// Writes to config.out, or to `fallback` when no path was given. Throws
// IoError when the file cannot be written.
void emit(const Report& report, const RunConfig& config, std::ostream& fallback);

std::string version_string();

}  // namespace nt::cli

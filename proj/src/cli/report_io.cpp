#include "cli/report_io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#ifndef NT_VERSION
#define NT_VERSION "unknown"
#endif

namespace nt::cli {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error(fmt::format("row has {} cells, table has {} columns", row.size(), columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

namespace {

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

nlohmann::json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_escape(table.columns[i]);
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(cell_text(row[i]));
    out << '\n';
  }
}

nlohmann::json to_json(const Report& report, const RunConfig& config) {
  nlohmann::json meta = {
      {"tool", "nt"},
      {"version", version_string()},
      {"command", report.command},
      {"config",
       {{"sieve_limit", config.sieve_limit},
        {"mode", to_string(config.mode)},
        {"tolerance", config.tolerance},
        {"format", to_string(config.format)},
        {"seed", config.seed},
        {"threads", config.threads}}},
      {"params", report.params},
  };
  if (report.wall_seconds) meta["wall_seconds"] = *report.wall_seconds;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[report.table.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  return {{"meta", std::move(meta)}, {"rows", std::move(rows)}};
}

namespace {

void write_to(std::ostream& out, const Report& report, const RunConfig& config) {
  if (config.format == OutputFormat::Csv) {
    write_csv(out, report.table);
  } else {
    out << to_json(report, config).dump(2) << '\n';
  }
}

}  // namespace

void emit(const Report& report, const RunConfig& config, std::ostream& fallback) {
  if (config.out.empty()) {
    write_to(fallback, report, config);
    return;
  }
  std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + config.out + " for writing");
  write_to(file, report, config);
  file.flush();
  if (!file) throw IoError("failed writing " + config.out);
}

std::string version_string() { return NT_VERSION; }

}  // namespace nt::cli

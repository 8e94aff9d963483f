#include "cli/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace nt::cli {

std::string to_string(OutputFormat format) { return format == OutputFormat::Csv ? "csv" : "json"; }

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw UsageError("unknown output format '" + name + "' (expected csv or json)");
}

RunConfig default_config() {
  RunConfig config;
  if (const char* env = std::getenv("NT_SIEVE_LIMIT"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      config.sieve_limit = std::stoll(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("NT_SIEVE_LIMIT is not an integer: ") + env);
    }
  }
  return config;
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open config file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    for (const auto& [key, value] : doc.items()) {
      if (key == "sieve-limit") {
        config.sieve_limit = value.get<std::int64_t>();
      } else if (key == "mode") {
        config.mode = parse_eval_mode(value.get<std::string>());
      } else if (key == "tolerance") {
        config.tolerance = value.get<double>();
      } else if (key == "format") {
        config.format = parse_output_format(value.get<std::string>());
      } else if (key == "seed") {
        config.seed = value.get<std::uint64_t>();
      } else if (key == "threads") {
        config.threads = value.get<unsigned>();
      } else if (key == "out") {
        config.out = value.get<std::string>();
      } else {
        throw UsageError("unknown key '" + key + "' in config file " + path);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad config file " + path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void validate(const RunConfig& config) {
  if (config.sieve_limit < 2) throw UsageError("--sieve-limit must be at least 2");
  if (!(config.tolerance > 0)) throw UsageError("--tolerance must be positive");
  if (config.threads < 1) throw UsageError("--threads must be at least 1");
}

}  // namespace nt::cli

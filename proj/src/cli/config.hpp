#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "nt/weights.hpp"

namespace nt::cli {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::int64_t sieve_limit = 200000;
  EvalMode mode = EvalMode::Exact;
  double tolerance = 1e-9;
  OutputFormat format = OutputFormat::Csv;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string out;      // empty: stdout
  bool timing = false;  // include wall time in written reports
};

// Usage errors (bad flag values, unknown names) are reported as this type.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string to_string(OutputFormat format);
OutputFormat parse_output_format(const std::string& name);

// Built-in defaults, then NT_SIEVE_LIMIT from the environment.
RunConfig default_config();

// Applies a JSON config file; keys are the long flag names without dashes
// ("sieve-limit", "mode", "tolerance", "format", "seed", "threads", "out").
void apply_config_file(RunConfig& config, const std::string& path);

// Throws UsageError unless sieve_limit >= 2, tolerance > 0, threads >= 1.
void validate(const RunConfig& config);

}  // namespace nt::cli

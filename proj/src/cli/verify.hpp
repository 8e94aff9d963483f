#pragma once

// Invariant suites behind `nt verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "nt/arith_sieve.hpp"

namespace nt::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  std::int64_t passed = 0;
  std::int64_t total = 0;
  std::optional<std::string> counterexample;  // first failure: inputs and both sides
  std::vector<std::string> notes;             // observations that are not assertions

  bool ok() const { return passed == total; }
};

// Grid sizes; unset fields take per-suite defaults.
struct VerifyOptions {
  std::optional<std::int64_t> N;
  std::optional<std::int64_t> hmax;
  std::optional<std::int64_t> qmax;
  std::int64_t samples = 200;  // randomized grids, drawn with the config seed
};

const std::vector<std::string>& suite_names();  // without "all"

// Throws UsageError for an unknown suite name; "all" runs every suite.
std::vector<CheckResult> run_suite(const std::string& suite, const ArithTable& table, const RunConfig& config,
                                   const VerifyOptions& options);

// Largest integer any suite will query, for sizing the sieve.
std::int64_t required_limit(const std::string& suite, const VerifyOptions& options);

}  // namespace nt::cli

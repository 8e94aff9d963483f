#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "cli/config.hpp"
#include "cli/report_io.hpp"
#include "cli/verify.hpp"
#include "nt/characters.hpp"
#include "nt/correlation.hpp"
#include "nt/errors.hpp"
#include "nt/expansion.hpp"
#include "nt/ramanujan.hpp"

namespace nt::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct GlobalFlags {
  std::optional<std::int64_t> sieve_limit;
  std::optional<std::string> mode;
  std::optional<double> tolerance;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> config_file;
  bool timing = false;
};

// Integer parameters shared by the compute objects.
struct Params {
  std::map<std::string, std::optional<std::int64_t>> ints;
  std::string route = "direct";

  std::int64_t get(const std::string& name) const {
    const auto it = ints.find(name);
    if (it == ints.end() || !it->second) throw UsageError("missing --" + name);
    return *it->second;
  }
  std::int64_t get_or(const std::string& name, std::int64_t fallback) const {
    const auto it = ints.find(name);
    return it == ints.end() || !it->second ? fallback : *it->second;
  }
};

const char* const kComputeParams[] = {"N", "n", "q", "k", "r", "h", "d", "m", "a", "chi", "Q", "prime-bound",
                                      "coprime-to"};

RunConfig resolve_config(const GlobalFlags& flags) {
  RunConfig config = default_config();
  if (flags.config_file) apply_config_file(config, *flags.config_file);
  if (flags.sieve_limit) config.sieve_limit = *flags.sieve_limit;
  if (flags.mode) {
    try {
      config.mode = parse_eval_mode(*flags.mode);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (flags.tolerance) config.tolerance = *flags.tolerance;
  if (flags.format) config.format = parse_output_format(*flags.format);
  if (flags.out) config.out = *flags.out;
  if (flags.threads) config.threads = *flags.threads;
  if (flags.seed) config.seed = *flags.seed;
  config.timing = flags.timing;
  validate(config);
  return config;
}

std::string format_value(const LogForm& v) {
  if (v.degree() == 0) return v.to_string();
  return v.to_string() + " = " + format_double(v.eval());
}
std::string format_value(double v) { return format_double(v); }
std::string format_value(const Weight& w) {
  return std::visit([](const auto& v) { return format_value(v); }, w);
}
std::string format_value(const CyclotomicElement& z) {
  const auto c = z.to_complex();
  const double re = std::fabs(c.real()) < 1e-12 ? 0.0 : c.real();
  const double im = std::fabs(c.imag()) < 1e-12 ? 0.0 : c.imag();
  return fmt::format("{} = {} {} {}i", z.to_string(), format_double(re), im < 0 ? '-' : '+', format_double(std::fabs(im)));
}

DirichletCharacter pick_character(const ArithTable& table, std::int64_t q, std::int64_t index) {
  auto group = character_group(table, q);
  if (index < 0 || index >= static_cast<std::int64_t>(group.size())) {
    throw UsageError(fmt::format("--chi must lie in [0, {}) for q={}", group.size(), q));
  }
  return group[static_cast<std::size_t>(index)];
}

std::string compute(const std::string& object, const Params& p, const ArithTable& table, const RunConfig& config) {
  const EvalMode mode = config.mode;
  auto weighted = [&](auto&& fn) { return format_value(dispatch(mode, fn)); };

  if (object == "ramsum") return std::to_string(ramanujan_sum(table, p.get("q"), p.get("n")));
  if (object == "ramsum_brute") return std::to_string(ramanujan_sum_bruteforce(p.get("q"), p.get("n")));
  if (object == "lambda") {
    const std::int64_t n = p.get("n");
    table.check(n);
    return weighted([&]<class V>() { return Weights<V>::von_mangoldt(table, n); });
  }
  if (object == "lambda_n") {
    return weighted([&]<class V>() { return lambda_incomplete<V>(table, p.get("N"), p.get("n")); });
  }
  if (object == "wintner") {
    return weighted(
        [&]<class V>() { return wintner_lambda_coeff<V>(table, p.get("N"), p.get("q"), p.get_or("coprime-to", 1)); });
  }
  if (object == "expansion") {
    return weighted([&]<class V>() { return finite_expansion_eval<V>(table, p.get("N"), p.get("n")); });
  }
  if (object == "psi") {
    return weighted([&]<class V>() { return psi_apc<V>(table, p.get("N"), p.get("q"), p.get("k")); });
  }
  if (object == "deviation") return nt::to_string(deviation(table, p.get("h"), p.get("q"), p.get("k")));
  if (object == "delta") {
    const std::int64_t N = p.get("N"), h = p.get("h");
    return weighted([&]<class V>() {
      if (p.route == "direct") return delta_direct<V>(table, N, h, config.threads);
      if (p.route == "via") return delta_via_corr<V>(table, N, h);
      if (p.route == "form1") return delta_form1<V>(table, N, h, config.threads);
      if (p.route == "form2") return delta_form2<V>(table, N, h, config.threads);
      throw UsageError("unknown --route '" + p.route + "' (direct, via, form1, form2)");
    });
  }
  if (object == "corr") {
    return weighted([&]<class V>() { return corr_lambda_lambda<V>(table, p.get("N"), p.get("h")); });
  }
  if (object == "corr_n") {
    return weighted([&]<class V>() { return corr_lambda_lambdaN<V>(table, p.get("N"), p.get("h")); });
  }
  if (object == "tail") {
    return weighted([&]<class V>() { return corr_tail<V>(table, p.get("N"), p.get("h")); });
  }
  if (object == "remainder") {
    return weighted([&]<class V>() { return remainder_r<V>(table, p.get("N"), p.get("h")); });
  }
  if (object == "expansion_rhs") {
    return weighted([&]<class V>() { return expansion_rhs<V>(table, p.get("N"), p.get("h")); });
  }
  if (object == "singular") return format_double(singular_series_truncated(table, p.get("h"), p.get("Q")));
  if (object == "singular_euler") {
    return format_double(singular_series_euler(p.get("k"), p.get_or("prime-bound", 1000000)));
  }
  if (object == "s_sum") return std::to_string(s_sum(table, p.get("N"), p.get("q"), p.get("k"), p.get("r")));
  if (object == "s_sum_closed") {
    return std::to_string(s_sum_closed(table, p.get("N"), p.get("q"), p.get("k"), p.get("r")));
  }
  if (object == "cohen") return nt::to_string(cohen_mean(table, p.get("q"), p.get("h")));
  if (object == "brauer") return nt::to_string(brauer_rademacher(table, p.get("q"), p.get("d"), p.get("n")));
  if (object == "character") return format_value(pick_character(table, p.get("q"), p.get("chi"))(p.get("n")));
  if (object == "conductor") return std::to_string(pick_character(table, p.get("q"), p.get("chi")).conductor());
  if (object == "toth") return format_value(toth_sum(table, pick_character(table, p.get("q"), p.get("chi")), p.get("n")));
  if (object == "primitive_sum") return std::to_string(primitive_sum(table, p.get("d"), p.get("a")));
  if (object == "upsilon") {
    return format_value(upsilon(table, p.get("r"), p.get("N"), pick_character(table, p.get("q"), p.get("chi"))));
  }
  if (object == "d_n_sum") return nt::to_string(d_n_sum(table, p.get("N"), p.get("h"), p.get("q"), p.get("r")));
  if (object == "t_sum") {
    return std::to_string(t_sum(table, p.get("N"), p.get("h"), p.get("m"), p.get("q"), p.get("r")));
  }
  if (object == "phi_sum") return std::to_string(phi_sum(table, p.get("N"), p.get("h"), p.get("q"), p.get("r")));
  throw UsageError("unknown object '" + object + "'");
}

const char* const kComputeObjects =
    "ramsum ramsum_brute lambda lambda_n wintner expansion psi deviation delta corr corr_n tail remainder "
    "expansion_rhs singular singular_euler s_sum s_sum_closed cohen brauer character conductor toth "
    "primitive_sum upsilon d_n_sum t_sum phi_sum";

int run_verify(const std::string& suite, const VerifyOptions& options, const ArithTable& table,
               const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const auto results = run_suite(suite, table, config, options);
  Table report_table{{"suite", "check", "passed", "total", "status", "counterexample"}, {}};
  std::int64_t failed = 0;
  for (const auto& r : results) {
    out << fmt::format("{}: {} {}/{} {}\n", r.suite, r.name, r.passed, r.total, r.ok() ? "pass" : "FAIL");
    if (r.counterexample) out << "  first counterexample: " << *r.counterexample << '\n';
    for (const auto& note : r.notes) out << "  note: " << note << '\n';
    if (!r.ok()) ++failed;
    report_table.add_row({r.suite, r.name, r.passed, r.total, std::string(r.ok() ? "pass" : "fail"),
                          r.counterexample ? Cell{*r.counterexample} : Cell{}});
  }
  out << fmt::format("verify {}: {} of {} checks pass\n", suite, results.size() - failed, results.size());
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (config.timing) err << fmt::format("elapsed {:.3f} s\n", seconds);
  if (!config.out.empty()) {
    Report report{"verify " + suite, {{"suite", suite}}, std::move(report_table), std::nullopt};
    if (config.timing) report.wall_seconds = seconds;
    emit(report, config, out);
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

struct ExperimentParams {
  std::int64_t N = 100000;
  std::vector<std::int64_t> ks{1};
  std::int64_t Q = 10000;
  std::int64_t prime_bound = 1000000;
  std::vector<std::int64_t> grid{50, 100, 200};
  std::int64_t h = 2;
  std::int64_t M = 200;
};

Report experiment(const std::string& kind, const ExperimentParams& e, const ArithTable& table,
                  const RunConfig& config, const CLI::App& sub) {
  Report report;
  report.command = "experiment " + kind;
  if (kind == "hl") {
    const std::int64_t N = sub.count("--N") ? e.N : 100000;
    report.params = {{"N", N}, {"k", e.ks}, {"Q", e.Q}, {"prime_bound", e.prime_bound}};
    report.table.columns = {"N",     "k",        "Q",          "prime_bound",        "corr_over_N",
                            "expansion_over_N", "singular_truncated", "singular_euler", "tail_correction",
                            "corr_rel_dev", "flagged"};
    for (const std::int64_t k : e.ks) {
      const HLReport r = hl_experiment(table, N, k, e.Q, e.prime_bound);
      const double rel = (r.corr_over_N - r.singular_euler) / r.singular_euler;
      report.table.add_row({r.N, r.k, r.Q, r.prime_bound, r.corr_over_N, r.expansion_over_N, r.singular_truncated,
                            r.singular_euler, r.tail_correction, rel, std::fabs(rel) > 0.1});
    }
    return report;
  }
  if (kind == "delta-trend") {
    report.params = {{"grid", e.grid}, {"h", e.h}, {"mode", to_string(config.mode)}};
    report.table.columns = {"N",           "h",         "mode",          "delta_direct",
                            "delta_via_corr", "delta_form1", "delta_form2", "remainder_r",
                            "corr",        "expansion_rhs", "max_pairwise_discrepancy", "delta_over_N",
                            "delta_exact"};
    for (const std::int64_t N : e.grid) {
      const DeltaReport r = delta_report(table, N, e.h, config.mode, config.threads);
      report.table.add_row({r.N, r.h, to_string(r.mode), r.delta_direct, r.delta_via_corr, r.delta_form1,
                            r.delta_form2 ? Cell{*r.delta_form2} : Cell{}, r.remainder_r, r.corr, r.expansion_rhs,
                            r.max_pairwise_discrepancy, r.delta_direct / static_cast<double>(N),
                            r.delta_exact ? Cell{*r.delta_exact} : Cell{}});
    }
    return report;
  }
  if (kind == "delange") {
    const std::int64_t N = sub.count("--N") ? e.N : 20;
    report.params = {{"N", N}, {"M", e.M}};
    report.table.columns = {"m", "partial_sum"};
    const auto sums = delange_partial_sums(table, N, e.M);
    for (std::size_t i = 0; i < sums.size(); ++i) {
      report.table.add_row({static_cast<std::int64_t>(i + 1), sums[i]});
    }
    return report;
  }
  throw UsageError("unknown experiment '" + kind + "' (hl, delta-trend, delange)");
}

void add_global_flags(CLI::App& app, GlobalFlags& g) {
  app.add_option("--sieve-limit", g.sieve_limit, "Sieve table size (default 200000, env NT_SIEVE_LIMIT)");
  app.add_option("--mode", g.mode, "exact or float (default exact)");
  app.add_option("--tolerance", g.tolerance, "Relative tolerance for float comparisons (default 1e-9)");
  app.add_option("--format", g.format, "csv or json (default csv)");
  app.add_option("--out", g.out, "Write the report to this file");
  app.add_option("--threads", g.threads, "Worker threads (default 1)");
  app.add_option("--seed", g.seed, "Seed for randomized grids (default 1)");
  app.add_option("--config", g.config_file, "JSON config file; flags override it");
  app.add_flag("--timing", g.timing, "Record wall time in reports and print it to stderr");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramanujan expansions, character sums and prime correlations", "nt"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);
  GlobalFlags flags;
  add_global_flags(app, flags);

  std::string object;
  Params params;
  auto* compute_cmd = app.add_subcommand("compute", "Print one value")->fallthrough();
  compute_cmd->set_help_flag("--help", "Print this help message and exit");
  compute_cmd->add_option("object", object, std::string("One of: ") + kComputeObjects)->required();
  for (const char* name : kComputeParams) compute_cmd->add_option(std::string("--") + name, params.ints[name]);
  compute_cmd->add_option("--route", params.route, "delta route: direct, via, form1, form2");

  std::string suite;
  VerifyOptions verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites")->fallthrough();
  verify_cmd->set_help_flag("--help", "Print this help message and exit");
  verify_cmd->add_option("suite", suite, "ramanujan, characters, expansion, delta, s_sum or all")->required();
  verify_cmd->add_option("--N", verify_options.N, "Range parameter");
  verify_cmd->add_option("--hmax", verify_options.hmax, "Largest shift");
  verify_cmd->add_option("--qmax", verify_options.qmax, "Largest modulus");
  verify_cmd->add_option("--samples", verify_options.samples, "Randomized samples");

  std::string kind;
  ExperimentParams exp;
  auto* experiment_cmd = app.add_subcommand("experiment", "Write an experiment table")->fallthrough();
  experiment_cmd->set_help_flag("--help", "Print this help message and exit");
  experiment_cmd->add_option("kind", kind, "hl, delta-trend or delange")->required();
  experiment_cmd->add_option("--N", exp.N, "Range (hl: 100000, delange: 20)");
  experiment_cmd->add_option("--k", exp.ks, "Comma-separated half-gaps for hl")->delimiter(',');
  experiment_cmd->add_option("--Q", exp.Q, "Singular series truncation");
  experiment_cmd->add_option("--prime-bound", exp.prime_bound, "Euler product prime bound");
  experiment_cmd->add_option("--grid", exp.grid, "Comma-separated N grid for delta-trend")->delimiter(',');
  experiment_cmd->add_option("--h", exp.h, "Shift for delta-trend");
  experiment_cmd->add_option("--M", exp.M, "Delange terms");

  std::vector<std::string> argv;
  argv.reserve(args.size());
  for (auto it = args.rbegin(); it != args.rend(); ++it) argv.push_back(*it);
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const RunConfig config = resolve_config(flags);
    const auto start = Clock::now();
    const ArithTable table(config.sieve_limit);
    if (*compute_cmd) {
      out << compute(object, params, table, config) << '\n';
      return kOk;
    }
    if (*verify_cmd) {
      if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        throw UsageError("unknown verify suite '" + suite + "'");
      }
      return run_verify(suite, verify_options, table, config, out, err);
    }
    Report report = experiment(kind, exp, table, config, *experiment_cmd);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (config.timing) {
      report.wall_seconds = seconds;
      err << fmt::format("elapsed {:.3f} s\n", seconds);
    }
    emit(report, config, out);
    return kOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeError& e) {
    err << "usage error: " << e.what() << " (raise --sieve-limit?)\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}

}  // namespace nt::cli

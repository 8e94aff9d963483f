#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <type_traits>

#include <fmt/format.h>

#include "nt/characters.hpp"
#include "nt/correlation.hpp"
#include "nt/expansion.hpp"
#include "nt/ramanujan.hpp"

namespace nt::cli {
namespace {

class Check {
 public:
  Check(std::string suite, std::string name) {
    result_.suite = std::move(suite);
    result_.name = std::move(name);
  }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.total;
    if (ok) {
      ++result_.passed;
    } else if (!result_.counterexample) {
      result_.counterexample = describe();
    }
  }

  void note(std::string text) { result_.notes.push_back(std::move(text)); }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string show(double v) { return fmt::format("{:.17g}", v); }
std::string show(const LogForm& v) { return fmt::format("{} (= {:.17g})", v.to_string(), v.eval()); }

template <class V>
bool agree(const V& a, const V& b, double tolerance) {
  if constexpr (std::is_same_v<V, LogForm>) {
    return a == b;
  } else {
    return std::fabs(a - b) <= tolerance * (1.0 + std::fabs(a));
  }
}

template <class V>
double as_double(const V& v) {
  if constexpr (std::is_same_v<V, LogForm>) {
    return v.eval();
  } else {
    return v;
  }
}

// Runs body.template operator()<V>() for the configured value type.
template <class Body>
void with_mode(EvalMode mode, Body&& body) {
  if (mode == EvalMode::Exact) {
    body.template operator()<LogForm>();
  } else {
    body.template operator()<double>();
  }
}

std::vector<std::int64_t> squarefree_between(const ArithTable& table, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = lo; q <= hi; ++q) {
    if (table.is_squarefree(q)) out.push_back(q);
  }
  return out;
}

// ---- ramanujan ----

std::vector<CheckResult> ramanujan_suite(const ArithTable& table, const VerifyOptions& options) {
  const std::int64_t qmax = options.qmax.value_or(256);
  std::vector<CheckResult> out;

  Check oracle("ramanujan", "oracle equivalence");
  for (std::int64_t q = 1; q <= qmax; ++q) {
    for (std::int64_t n = 1; n <= qmax; ++n) {
      const std::int64_t closed = ramanujan_sum(table, q, n);
      const std::int64_t brute = ramanujan_sum_bruteforce(q, n);
      oracle.expect(closed == brute, [&] { return fmt::format("q={} n={}: closed {} brute {}", q, n, closed, brute); });
    }
  }
  out.push_back(oracle.done());

  Check divisor_sum("ramanujan", "divisor sum");
  for (std::int64_t m = 1; m <= qmax; ++m) {
    const auto divs = table.divisors(m);
    for (std::int64_t n = 1; n <= qmax; ++n) {
      std::int64_t sum = 0;
      for (const std::int64_t q : divs) sum += ramanujan_sum(table, q, n);
      const std::int64_t expected = n % m == 0 ? m : 0;
      divisor_sum.expect(sum == expected, [&] { return fmt::format("m={} n={}: {} vs {}", m, n, sum, expected); });
    }
  }
  out.push_back(divisor_sum.done());

  Check period("ramanujan", "period sum");
  for (std::int64_t q = 1; q <= 2 * qmax; ++q) {
    std::int64_t sum = 0;
    for (std::int64_t t = 1; t <= q; ++t) sum += ramanujan_sum(table, q, t);
    period.expect(sum == (q == 1 ? 1 : 0), [&] { return fmt::format("q={}: sum {}", q, sum); });
  }
  out.push_back(period.done());

  Check cohen("ramanujan", "cohen mean");
  for (std::int64_t q = 1; q <= qmax / 2; ++q) {
    for (std::int64_t h = 0; h <= qmax / 2; ++h) {
      const Rational a = cohen_mean(table, q, h);
      const Rational b = cohen_mean_closed(table, q, h);
      cohen.expect(a == b, [&] { return fmt::format("q={} h={}: {} vs {}", q, h, nt::to_string(a), nt::to_string(b)); });
    }
  }
  out.push_back(cohen.done());

  Check brauer("ramanujan", "brauer-rademacher");
  for (const std::int64_t q : squarefree_between(table, 1, 100)) {
    for (const std::int64_t d : table.divisors(q)) {
      for (std::int64_t n = 0; n <= 100; ++n) {
        const Rational a = brauer_rademacher(table, q, d, n);
        const Rational b = brauer_rademacher_split(table, q, d, n);
        const Rational c = brauer_rademacher_closed(table, q, d, n);
        brauer.expect(a == b && b == c, [&] {
          return fmt::format("q={} d={} n={}: {} / {} / {}", q, d, n, nt::to_string(a), nt::to_string(b), nt::to_string(c));
        });
      }
    }
  }
  out.push_back(brauer.done());

  Check mult("ramanujan", "multiplicativity");
  for (std::int64_t a = 1; a <= 32; ++a) {
    for (std::int64_t b = 1; b <= 32; ++b) {
      if (gcd(a, b) != 1) continue;
      for (std::int64_t n = 0; n <= 64; ++n) {
        const std::int64_t lhs = ramanujan_sum(table, a * b, n);
        const std::int64_t rhs = ramanujan_sum(table, a, n) * ramanujan_sum(table, b, n);
        mult.expect(lhs == rhs, [&] { return fmt::format("q1={} q2={} n={}: {} vs {}", a, b, n, lhs, rhs); });
      }
    }
  }
  out.push_back(mult.done());
  return out;
}

// ---- characters ----

std::vector<CheckResult> characters_suite(const ArithTable& table, const VerifyOptions& options) {
  const std::int64_t qmax = options.qmax.value_or(30);
  const std::int64_t N = options.N.value_or(60);
  const std::int64_t hmax = options.hmax.value_or(10);
  std::vector<CheckResult> out;

  Check orth("characters", "orthogonality");
  for (const std::int64_t q : squarefree_between(table, 1, qmax)) {
    const auto group = character_group(table, q);
    orth.expect(static_cast<std::int64_t>(group.size()) == table.phi(q),
                [&] { return fmt::format("q={}: {} characters, phi {}", q, group.size(), table.phi(q)); });
    for (std::int64_t n = 0; n < q; ++n) {
      CyclotomicElement sum;
      for (const auto& chi : group) sum += chi(n);
      const std::int64_t expected = mod_floor(n, q) == 1 % q ? table.phi(q) : 0;
      orth.expect(sum == CyclotomicElement::integer(expected, 1),
                  [&] { return fmt::format("q={} n={}: {} vs {}", q, n, sum.to_string(), expected); });
    }
  }
  out.push_back(orth.done());

  Check toth("characters", "toth identity");
  for (const std::int64_t q : squarefree_between(table, 1, qmax)) {
    for (const auto& chi : character_group(table, q)) {
      for (std::int64_t n = 0; n < q; ++n) {
        const auto a = toth_sum(table, chi, n);
        const auto b = toth_closed(table, chi, n);
        toth.expect(a == b, [&] { return fmt::format("q={} n={}: {} vs {}", q, n, a.to_string(), b.to_string()); });
      }
    }
  }
  out.push_back(toth.done());

  Check prim("characters", "primitive sum");
  for (const std::int64_t d : squarefree_between(table, 1, 100)) {
    for (std::int64_t a = 1; a <= d; ++a) {
      if (gcd(a, d) != 1) continue;
      const std::int64_t direct = primitive_sum_direct(table, d, a);
      const std::int64_t formula = primitive_sum_formula(table, d, a);
      prim.expect(direct == formula, [&] { return fmt::format("d={} a={}: {} vs {}", d, a, direct, formula); });
    }
  }
  out.push_back(prim.done());

  Check phi("characters", "phi routes");
  for (const std::int64_t q : squarefree_between(table, 3, qmax)) {
    for (std::int64_t r = 1; r <= 10; ++r) {
      if (gcd(q, r) != 1 || !table.is_squarefree(r)) continue;
      for (std::int64_t h = 1; h <= hmax; ++h) {
        const std::int64_t a = phi_sum_characters(table, N, h, q, r);
        const std::int64_t b = phi_sum_divisors(table, N, h, q, r);
        const std::int64_t c = phi_sum(table, N, h, q, r);
        phi.expect(a == b && b == c,
                   [&] { return fmt::format("N={} h={} q={} r={}: {} / {} / {}", N, h, q, r, a, b, c); });
      }
    }
  }
  out.push_back(phi.done());
  return out;
}

// ---- expansion ----

std::vector<CheckResult> expansion_suite(const ArithTable& table, const RunConfig& config,
                                         const VerifyOptions& options) {
  const std::int64_t Nmax = options.N.value_or(32);
  const std::int64_t nmax = 8 * Nmax;
  std::vector<CheckResult> out;

  with_mode(config.mode, [&]<class V>() {
    Check fre("expansion", "finite expansion");
    for (std::int64_t N = 1; N <= Nmax; ++N) {
      const auto coeffs = wintner_lambda_coeffs<V>(table, N);
      for (std::int64_t n = 1; n <= nmax; ++n) {
        const V lhs = finite_expansion_eval<V>(table, coeffs, n);
        const V rhs = lambda_incomplete<V>(table, N, n);
        fre.expect(agree(lhs, rhs, config.tolerance),
                   [&] { return fmt::format("N={} n={}: {} vs {}", N, n, show(lhs), show(rhs)); });
      }
    }
    out.push_back(fre.done());

    Check rearranged("expansion", "rearranged expansion");
    for (std::int64_t N = 1; N <= std::min<std::int64_t>(Nmax, 24); ++N) {
      for (std::int64_t n = 1; n <= 64; ++n) {
        const V lhs = finite_expansion_rearranged<V>(table, N, n);
        const V rhs = finite_expansion_eval<V>(table, N, n);
        rearranged.expect(agree(lhs, rhs, config.tolerance),
                          [&] { return fmt::format("N={} n={}: {} vs {}", N, n, show(lhs), show(rhs)); });
      }
    }
    out.push_back(rearranged.done());

    Check coeff("expansion", "wintner coefficients");
    for (std::int64_t N = 1; N <= Nmax; ++N) {
      for (std::int64_t q = 1; q <= N; ++q) {
        V oracle = Weights<V>::zero();
        for (std::int64_t e = q; e <= N; e += q) {
          if (table.mu(e) != 0 && e > 1) oracle -= scale(Weights<V>::log_of(table, e), Weights<V>::ratio(table.mu(e), e));
        }
        const V value = wintner_lambda_coeff<V>(table, N, q);
        coeff.expect(agree(value, oracle, config.tolerance),
                     [&] { return fmt::format("N={} q={}: {} vs {}", N, q, show(value), show(oracle)); });
      }
    }
    out.push_back(coeff.done());
  });

  Check delange("expansion", "delange partial sums monotone");
  const auto sums = delange_partial_sums(table, 20, 200);
  for (std::size_t i = 1; i < sums.size(); ++i) {
    delange.expect(sums[i] >= sums[i - 1],
                   [&] { return fmt::format("M={}: {} < {}", i + 1, show(sums[i]), show(sums[i - 1])); });
  }
  delange.note(fmt::format("N=20 M=200 partial sum {}", show(sums.back())));
  out.push_back(delange.done());
  return out;
}

// ---- delta ----

std::vector<CheckResult> delta_suite(const ArithTable& table, const RunConfig& config, const VerifyOptions& options) {
  const std::int64_t N = options.N.value_or(50);
  const std::int64_t hmax = options.hmax.value_or(12);
  std::vector<CheckResult> out;

  with_mode(config.mode, [&]<class V>() {
    const double tol = config.tolerance;
    Check routes("delta", "four-route equivalence");
    for (std::int64_t h = 0; h <= hmax; ++h) {
      const V direct = delta_direct<V>(table, N, h, config.threads);
      const V via = delta_via_corr<V>(table, N, h);
      const V form1 = delta_form1<V>(table, N, h, config.threads);
      routes.expect(agree(direct, via, tol) && agree(direct, form1, tol), [&] {
        return fmt::format("N={} h={}: direct {} via {} form1 {}", N, h, show(direct), show(via), show(form1));
      });
      if (h >= 1) {
        const V form2 = delta_form2<V>(table, N, h, config.threads);
        routes.expect(agree(direct, form2, tol),
                      [&] { return fmt::format("N={} h={}: direct {} form2 {}", N, h, show(direct), show(form2)); });
      }
    }
    out.push_back(routes.done());

    Check small("delta", "moduli 1 and 2 contribute zero");
    for (std::int64_t h = 0; h <= hmax; ++h) {
      for (const std::int64_t q : {1, 2}) {
        if (q > N) continue;
        const V term = delta_modulus_term<V>(table, N, h, q);
        small.expect(agree(term, Weights<V>::zero(), tol),
                     [&] { return fmt::format("N={} h={} q={}: {}", N, h, q, show(term)); });
      }
    }
    out.push_back(small.done());

    Check centered("delta", "centering invariance");
    for (std::int64_t h = 0; h <= hmax; ++h) {
      const V a = delta_direct<V>(table, N, h);
      const V b = delta_direct_centered<V>(table, N, h);
      centered.expect(agree(a, b, tol), [&] { return fmt::format("N={} h={}: {} vs {}", N, h, show(a), show(b)); });
    }
    out.push_back(centered.done());

    Check prime_q("delta", "prime moduli vanish in remainder");
    for (std::int64_t h = 0; h <= hmax; ++h) {
      const V all = remainder_r<V>(table, N, h, RemainderModuli::Squarefree);
      const V composite = remainder_r<V>(table, N, h, RemainderModuli::SquarefreeComposite);
      prime_q.expect(agree(all, composite, tol),
                     [&] { return fmt::format("N={} h={}: {} vs {}", N, h, show(all), show(composite)); });
    }
    out.push_back(prime_q.done());

    Check tail("delta", "tail identity");
    for (std::int64_t h = 1; h <= hmax; ++h) {
      const V lhs = corr_lambda_lambda<V>(table, N, h);
      const V rhs = corr_lambda_lambdaN<V>(table, N, h) - corr_tail<V>(table, N, h);
      tail.expect(agree(lhs, rhs, tol), [&] { return fmt::format("N={} h={}: {} vs {}", N, h, show(lhs), show(rhs)); });
    }
    out.push_back(tail.done());

    Check moment("delta", "expansion moments");
    for (std::int64_t h = 0; h <= hmax; ++h) {
      const V a = expansion_rhs<V>(table, N, h);
      const V b = expansion_rhs_direct<V>(table, N, h);
      moment.expect(agree(a, b, tol), [&] { return fmt::format("N={} h={}: {} vs {}", N, h, show(a), show(b)); });
    }
    out.push_back(moment.done());

    Check negative("delta", "negative shifts");
    for (std::int64_t h = 1; h <= hmax; ++h) {
      const V value = delta_direct<V>(table, N, -h);
      const double v = as_double(value);
      negative.expect(std::isfinite(v), [&] { return fmt::format("N={} h={}: {}", N, -h, show(value)); });
      if (h <= 3) negative.note(fmt::format("delta_direct(N={}, h={}) = {}", N, -h, show(v)));
    }
    out.push_back(negative.done());
  });

  Check dn("delta", "D_N representations");
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::int64_t> pick_q(1, 30), pick_r(1, 30), pick_h(0, 12), pick_n(1, 60);
  for (std::int64_t i = 0; i < options.samples; ++i) {
    const std::int64_t q = pick_q(rng), r = pick_r(rng), h = pick_h(rng), n = pick_n(rng);
    if (gcd(q, r) != 1) continue;
    const Rational a = d_n_sum(table, n, h, q, r);
    const Rational b = d_n_sum_progressions(table, n, h, q, r);
    dn.expect(a == b, [&] {
      return fmt::format("N={} h={} q={} r={}: {} vs {}", n, h, q, r, nt::to_string(a), nt::to_string(b));
    });
  }
  out.push_back(dn.done());
  return out;
}

// ---- s_sum ----

std::vector<CheckResult> s_sum_suite(const ArithTable& table, const VerifyOptions& options) {
  const std::int64_t qmax = options.qmax.value_or(20);
  const std::int64_t pmax = std::min<std::int64_t>(qmax, 12);
  std::vector<CheckResult> out;

  Check closed("s_sum", "closed forms");
  double worst_ratio = 0;
  std::string worst_at;
  for (std::int64_t q = 1; q <= qmax; ++q) {
    for (std::int64_t r = 1; r <= qmax; ++r) {
      const bool coprime = gcd(q, r) == 1;
      const bool divides = q % r == 0;
      for (std::int64_t N = 0; N <= 3 * q * r; ++N) {
        for (std::int64_t k = 1; k <= q; ++k) {
          const std::int64_t direct = s_sum(table, N, q, k, r);
          if (coprime || divides) {
            const std::int64_t value = s_sum_closed(table, N, q, k, r);
            closed.expect(value == direct, [&] {
              return fmt::format("N={} q={} k={} r={}: closed {} direct {}", N, q, k, r, value, direct);
            });
          }
          if (!divides && r >= 2) {
            const double ratio = std::fabs(static_cast<double>(direct)) / (r * std::log(static_cast<double>(r)));
            if (ratio > worst_ratio) {
              worst_ratio = ratio;
              worst_at = fmt::format("N={} q={} k={} r={}", N, q, k, r);
            }
          }
        }
      }
    }
  }
  closed.note(fmt::format("max |S|/(r log r) over r not dividing q: {:.6g} at {}", worst_ratio, worst_at));
  out.push_back(closed.done());

  Check periodic("s_sum", "periodicity");
  Check antisym("s_sum", "antisymmetry");
  Check zero("s_sum", "period zero-sum");
  for (std::int64_t q = 2; q <= pmax; ++q) {
    for (std::int64_t r = 2; r <= pmax; ++r) {
      if (gcd(q, r) != 1) continue;
      const std::int64_t period = q * r;
      std::int64_t total = 0;
      for (std::int64_t k = 1; k <= q; ++k) {
        for (std::int64_t N = 0; N < period; ++N) {
          const std::int64_t s = s_sum(table, N, q, k, r);
          const std::int64_t s1 = s_sum(table, N + period, q, k, r);
          const std::int64_t s2 = s_sum(table, N + 2 * period, q, k, r);
          periodic.expect(s == s1 && s == s2, [&] {
            return fmt::format("q={} k={} r={} N={}: {} / {} / {}", q, k, r, N, s, s1, s2);
          });
        }
        if (gcd(k, q) != 1) continue;
        std::int64_t forward = 0, backward = 0;
        for (std::int64_t N = 1; N <= period; ++N) {
          forward += s_sum(table, N, q, k, r);
          backward += s_sum(table, N, q, q - k, r);
        }
        antisym.expect(forward == -backward,
                       [&] { return fmt::format("q={} k={} r={}: {} vs {}", q, k, r, forward, -backward); });
        total += forward;
      }
      zero.expect(total == 0, [&] { return fmt::format("q={} r={}: {}", q, r, total); });
    }
  }
  out.push_back(periodic.done());
  out.push_back(antisym.done());
  out.push_back(zero.done());
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ramanujan", "characters", "expansion", "delta", "s_sum"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const ArithTable& table, const RunConfig& config,
                                   const VerifyOptions& options) {
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, table, config, options);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  if (suite == "ramanujan") return ramanujan_suite(table, options);
  if (suite == "characters") return characters_suite(table, options);
  if (suite == "expansion") return expansion_suite(table, config, options);
  if (suite == "delta") return delta_suite(table, config, options);
  if (suite == "s_sum") return s_sum_suite(table, options);
  throw UsageError("unknown verify suite '" + suite + "'");
}

std::int64_t required_limit(const std::string&, const VerifyOptions& options) {
  const std::int64_t N = options.N.value_or(64);
  const std::int64_t hmax = options.hmax.value_or(12);
  const std::int64_t qmax = options.qmax.value_or(256);
  return std::max({std::int64_t{1024}, 8 * N + 64, N + hmax + 1, 2 * qmax + 1});
}

}  // namespace nt::cli

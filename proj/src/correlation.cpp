#include "nt/correlation.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "nt/characters.hpp"
#include "nt/errors.hpp"
#include "nt/parallel.hpp"
#include "nt/ramanujan.hpp"

namespace nt {
namespace {

struct PrimePowerEntry {
  std::int64_t n;
  std::int64_t p;
};

std::vector<PrimePowerEntry> prime_powers_upto(const ArithTable& table, std::int64_t N) {
  std::vector<PrimePowerEntry> out;
  for (std::int64_t n = 2; n <= N; ++n) {
    if (const std::int64_t p = table.prime_power_base(n)) out.push_back({n, p});
  }
  return out;
}

std::vector<std::int64_t> squarefree_upto(const ArithTable& table, std::int64_t from, std::int64_t N) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = from; q <= N; ++q) {
    if (table.mu(q) != 0) out.push_back(q);
  }
  return out;
}

void require_range(const ArithTable& table, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("range N must be positive, got " + std::to_string(N));
  table.check(N);
}

void require_shift(const ArithTable& table, std::int64_t N, std::int64_t h) {
  require_range(table, N);
  if (h < 0) throw std::invalid_argument("correlation shift must be non-negative, got " + std::to_string(h));
  table.check(N + h);
}

void require_coprime(std::int64_t q, std::int64_t r) {
  if (q < 1 || r < 1) throw std::invalid_argument("moduli must be positive");
  if (gcd(q, r) != 1) {
    throw DomainError("moduli q=" + std::to_string(q) + " and r=" + std::to_string(r) + " must be coprime");
  }
}

template <class V>
V sum_in_order(const std::vector<V>& terms) {
  Accumulator<V> sum;
  for (const auto& t : terms) sum.add(t);
  return sum.value();
}

// ⌊log_p N⌋ for prime p.
std::int64_t prime_power_count(std::int64_t p, std::int64_t N) {
  std::int64_t count = 0;
  for (std::int64_t pk = p; pk <= N; pk *= p) {
    ++count;
    if (pk > N / p) break;
  }
  return count;
}

template <class V>
V chebyshev_psi(const ArithTable& table, std::int64_t N) {
  Accumulator<V> sum;
  for (const std::uint32_t p : table.primes()) {
    if (p > N) break;
    sum.add(scale(Weights<V>::log_prime(p), Weights<V>::scalar(prime_power_count(p, N))));
  }
  return sum.value();
}

template <class V>
V moment_squarefree(const ArithTable& table, std::int64_t N, std::int64_t q, const V& psi) {
  using W = Weights<V>;
  Accumulator<V> sum;
  sum.add(scale(psi, W::scalar(table.mu(q))));
  for (const auto& [p, e] : table.factorize(q)) {
    if (p > N) break;
    sum.add(scale(W::log_prime(p), W::scalar(prime_power_count(p, N) * table.mu(q / p) * p)));
  }
  return sum.value();
}

template <class V>
V modulus_term(const ArithTable& table, const std::vector<PrimePowerEntry>& pps, const V& coeff,
               std::int64_t h, std::int64_t q) {
  using W = Weights<V>;
  std::vector<V> psi(static_cast<std::size_t>(q), W::zero());
  for (const auto& [n, p] : pps) psi[static_cast<std::size_t>(n % q)] += W::log_prime(p);
  Accumulator<V> inner;
  for (std::int64_t k = 1; k <= q; ++k) {
    if (gcd(k, q) != 1) continue;
    const IntRatio dev = deviation_ratio(table, h, q, k);
    if (dev.num == 0) continue;
    inner.add(scale(psi[static_cast<std::size_t>(k % q)], W::scalar(dev)));
  }
  return coeff * inner.value();
}

}  // namespace

template <class V>
V psi_apc(const ArithTable& table, std::int64_t N, std::int64_t q, std::int64_t k) {
  if (q < 1) throw std::invalid_argument("modulus must be positive");
  if (N < 1) return Weights<V>::zero();
  table.check(N);
  Accumulator<V> sum;
  for (std::int64_t n = mod_floor(k - 1, q) + 1; n <= N; n += q) {
    if (const std::int64_t p = table.prime_power_base(n)) sum.add(Weights<V>::log_prime(p));
  }
  return sum.value();
}

IntRatio deviation_ratio(const ArithTable& table, std::int64_t h, std::int64_t q, std::int64_t k) {
  const std::int64_t phi = table.phi(q);
  return {ramanujan_sum(table, q, k + h) * phi - table.mu(q) * ramanujan_sum(table, q, h), phi};
}

Rational deviation(const ArithTable& table, std::int64_t h, std::int64_t q, std::int64_t k) {
  return deviation_ratio(table, h, q, k).to_rational();
}

template <class V>
V corr_lambda_lambdaN(const ArithTable& table, std::int64_t N, std::int64_t h) {
  require_shift(table, N, h);
  Accumulator<V> sum;
  for (std::int64_t m = 2; m <= N; ++m) {
    const std::int64_t p = table.prime_power_base(m);
    if (p == 0) continue;
    const V tail = lambda_incomplete<V>(table, N, m + h);
    sum.add(Weights<V>::log_prime(p) * tail);
  }
  return sum.value();
}

template <class V>
V corr_lambda_lambda(const ArithTable& table, std::int64_t N, std::int64_t h) {
  require_shift(table, N, h);
  Accumulator<V> sum;
  for (std::int64_t n = 2; n <= N; ++n) {
    const std::int64_t p = table.prime_power_base(n);
    if (p == 0) continue;
    const std::int64_t p2 = table.prime_power_base(n + h);
    if (p2 == 0) continue;
    sum.add(Weights<V>::log_prime(p) * Weights<V>::log_prime(p2));
  }
  return sum.value();
}

template <class V>
V corr_tail(const ArithTable& table, std::int64_t N, std::int64_t h) {
  require_shift(table, N, h);
  using W = Weights<V>;
  Accumulator<V> sum;
  for (std::int64_t d = N + 1; d <= N + h; ++d) {
    const int mu = table.mu(d);
    if (mu == 0) continue;
    Accumulator<V> progression;
    for (std::int64_t n = mod_floor(-h - 1, d) + 1; n <= N; n += d) {
      if (const std::int64_t p = table.prime_power_base(n)) progression.add(W::log_prime(p));
    }
    sum.add(scale(W::log_of(table, d) * progression.value(), W::scalar(mu)));
  }
  return sum.value();
}

template <class V>
V delta_modulus_term(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q) {
  require_range(table, N);
  const V coeff = wintner_lambda_coeff<V>(table, N, q);
  return modulus_term<V>(table, prime_powers_upto(table, N), coeff, h, q);
}

template <class V>
V delta_direct(const ArithTable& table, std::int64_t N, std::int64_t h, unsigned threads) {
  require_range(table, N);
  const auto coeffs = wintner_lambda_coeffs<V>(table, N);
  const auto pps = prime_powers_upto(table, N);
  const auto moduli = squarefree_upto(table, 1, N);
  const auto terms = parallel_map<V>(moduli.size(), threads, [&](std::size_t i) {
    return modulus_term<V>(table, pps, coeffs[moduli[i]], h, moduli[i]);
  });
  return sum_in_order(terms);
}

template <class V>
V delta_direct_centered(const ArithTable& table, std::int64_t N, std::int64_t h) {
  require_range(table, N);
  using W = Weights<V>;
  const auto coeffs = wintner_lambda_coeffs<V>(table, N);
  const auto pps = prime_powers_upto(table, N);
  Accumulator<V> total;
  for (const std::int64_t q : squarefree_upto(table, 1, N)) {
    std::vector<V> psi(static_cast<std::size_t>(q), W::zero());
    Accumulator<V> coprime;
    for (const auto& [n, p] : pps) {
      psi[static_cast<std::size_t>(n % q)] += W::log_prime(p);
      if (gcd(n, q) == 1) coprime.add(W::log_prime(p));
    }
    const V mean = scale(coprime.value(), W::ratio(1, table.phi(q)));
    Accumulator<V> inner;
    for (std::int64_t k = 1; k <= q; ++k) {
      if (gcd(k, q) != 1) continue;
      inner.add(scale(psi[static_cast<std::size_t>(k % q)] - mean, W::scalar(deviation_ratio(table, h, q, k))));
    }
    total.add(coeffs[q] * inner.value());
  }
  return total.value();
}

template <class V>
V lambda_ramanujan_moment(const ArithTable& table, std::int64_t N, std::int64_t q) {
  require_range(table, N);
  table.check(q);
  if (table.mu(q) == 0) return lambda_ramanujan_moment_direct<V>(table, N, q);
  return moment_squarefree<V>(table, N, q, chebyshev_psi<V>(table, N));
}

template <class V>
V lambda_ramanujan_moment_direct(const ArithTable& table, std::int64_t N, std::int64_t q) {
  require_range(table, N);
  Accumulator<V> sum;
  for (std::int64_t n = 2; n <= N; ++n) {
    const std::int64_t p = table.prime_power_base(n);
    if (p == 0) continue;
    const std::int64_t c = ramanujan_sum(table, q, n);
    if (c != 0) sum.add(scale(Weights<V>::log_prime(p), Weights<V>::scalar(c)));
  }
  return sum.value();
}

template <class V>
V expansion_rhs(const ArithTable& table, std::int64_t N, std::int64_t h) {
  require_range(table, N);
  using W = Weights<V>;
  const auto coeffs = wintner_lambda_coeffs<V>(table, N);
  const V psi = chebyshev_psi<V>(table, N);
  Accumulator<V> sum;
  for (std::int64_t q = 1; q <= N; ++q) {
    if (table.mu(q) == 0) continue;
    const std::int64_t c = ramanujan_sum(table, q, h);
    if (c == 0) continue;
    const V moment = moment_squarefree<V>(table, N, q, psi);
    sum.add(scale(coeffs[q] * moment, W::ratio(c, table.phi(q))));
  }
  return sum.value();
}

template <class V>
V expansion_rhs_direct(const ArithTable& table, std::int64_t N, std::int64_t h) {
  require_range(table, N);
  using W = Weights<V>;
  Accumulator<V> sum;
  for (std::int64_t q = 1; q <= N; ++q) {
    const V coeff = wintner_lambda_coeff<V>(table, N, q);
    const V moment = lambda_ramanujan_moment_direct<V>(table, N, q);
    sum.add(scale(coeff * moment, W::ratio(ramanujan_sum(table, q, h), table.phi(q))));
  }
  return sum.value();
}

template <class V>
V remainder_r(const ArithTable& table, std::int64_t N, std::int64_t h, RemainderModuli moduli) {
  require_range(table, N);
  using W = Weights<V>;
  const auto coeffs = wintner_lambda_coeffs<V>(table, N);
  const auto pps = prime_powers_upto(table, N);
  Accumulator<V> total;
  for (const std::int64_t q : squarefree_upto(table, 2, N)) {
    if (moduli == RemainderModuli::SquarefreeComposite && table.is_prime(q)) continue;
    const std::int64_t phi = table.phi(q);
    const std::int64_t c_h = ramanujan_sum(table, q, h);
    Accumulator<V> inner;
    for (const auto& [n, p] : pps) {
      if (q % p != 0) continue;  // (n, q) > 1 iff p | q
      const std::int64_t num = ramanujan_sum(table, q, n + h) * phi - ramanujan_sum(table, q, n) * c_h;
      if (num != 0) inner.add(scale(W::log_prime(p), W::ratio(num, phi)));
    }
    total.add(coeffs[q] * inner.value());
  }
  return total.value();
}

template <class V>
V delta_via_corr(const ArithTable& table, std::int64_t N, std::int64_t h) {
  require_shift(table, N, h);
  V value = corr_lambda_lambdaN<V>(table, N, h);
  value -= expansion_rhs<V>(table, N, h);
  value -= remainder_r<V>(table, N, h);
  return value;
}

IntRatio d_n_sum_ratio(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q, std::int64_t r) {
  require_coprime(q, r);
  table.check(q);
  table.check(r);
  const std::int64_t phi = table.phi(q);
  const std::int64_t mean = table.mu(q) * ramanujan_sum(table, q, h);
  std::int64_t num = 0;
  for (std::int64_t n = 1; n <= N; ++n) {
    if (gcd(n, q) != 1) continue;
    const std::int64_t c_r = ramanujan_sum(table, r, n);
    if (c_r != 0) num += c_r * (ramanujan_sum(table, q, n + h) * phi - mean);
  }
  return {num, phi};
}

Rational d_n_sum(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q, std::int64_t r) {
  return d_n_sum_ratio(table, N, h, q, r).to_rational();
}

Rational d_n_sum_progressions(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q,
                              std::int64_t r) {
  require_coprime(q, r);
  Rational sum;
  for (std::int64_t k = 1; k <= q; ++k) {
    if (gcd(k, q) != 1) continue;
    sum += Rational(static_cast<long>(s_sum(table, N, q, k, r))) * deviation(table, h, q, k);
  }
  return sum;
}

template <class V>
V delta_form1(const ArithTable& table, std::int64_t N, std::int64_t h, unsigned threads) {
  require_range(table, N);
  using W = Weights<V>;
  const auto coeffs = wintner_lambda_coeffs<V>(table, N);
  const auto moduli = squarefree_upto(table, 3, N);
  const auto terms = parallel_map<V>(moduli.size(), threads, [&](std::size_t i) {
    const std::int64_t q = moduli[i];
    Accumulator<V> inner;
    for (std::int64_t r = 1; r <= N; ++r) {
      if (table.mu(r) == 0 || gcd(r, q) != 1) continue;
      const IntRatio d = d_n_sum_ratio(table, N, h, q, r);
      if (d.num == 0) continue;
      inner.add(scale(wintner_lambda_coeff<V>(table, N, r, q), W::scalar(d)));
    }
    return coeffs[q] * inner.value();
  });
  return sum_in_order(terms);
}

std::int64_t t_sum(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t m, std::int64_t q,
                   std::int64_t r) {
  table.check(q);
  if (!table.is_squarefree(q)) throw DomainError("T-sum modulus " + std::to_string(q) + " is not squarefree");
  if (m < 1 || q % m != 0) throw DomainError(std::to_string(m) + " does not divide " + std::to_string(q));
  require_coprime(q, r);
  std::int64_t sum = 0;
  for (std::int64_t n = 1; n <= N; ++n) {
    if (gcd(n, q) != 1 || mod_floor(n + h, m) != 0) continue;
    sum += ramanujan_sum(table, r, n);
  }
  return sum;
}

std::int64_t phi_sum_characters(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q,
                                std::int64_t r) {
  require_coprime(q, r);
  CyclotomicElement total;
  for (const auto& chi : character_group(table, q)) {
    if (chi.is_principal()) continue;
    const std::int64_t d = chi.conductor();
    const CyclotomicElement at_minus_h = chi.primitive_part()(-h);
    if (at_minus_h.is_zero()) continue;
    total += upsilon(table, r, N, chi) * at_minus_h * d;
  }
  return total.integer_value();
}

std::int64_t phi_sum_divisors(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q,
                              std::int64_t r) {
  require_coprime(q, r);
  table.check(q);
  if (!table.is_squarefree(q)) throw DomainError("modulus " + std::to_string(q) + " is not squarefree");
  const auto divs = table.divisors(q);
  std::int64_t sum = 0;
  for (std::int64_t n = 1; n <= N; ++n) {
    if (gcd(n, q) != 1) continue;
    const std::int64_t c_r = ramanujan_sum(table, r, n);
    if (c_r == 0) continue;
    std::int64_t weight = 0;
    for (const std::int64_t d : divs) {
      if (d == 1 || gcd(d, h) != 1) continue;
      std::int64_t inner = 0;
      for (const std::int64_t m : table.divisors(gcd(d, n + h))) {
        inner += table.phi(m) * table.mu(d / m);
      }
      weight += d * inner;
    }
    sum += c_r * weight;
  }
  return sum;
}

std::int64_t phi_sum(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q, std::int64_t r) {
  require_coprime(q, r);
  table.check(q);
  if (!table.is_squarefree(q)) throw DomainError("modulus " + std::to_string(q) + " is not squarefree");
  std::int64_t sum = -t_sum(table, N, h, 1, q, r);
  for (const std::int64_t m : table.divisors(q)) {
    if (gcd(m, h) != 1) continue;
    std::int64_t weight = m * table.phi(m);
    for (const auto& [p, e] : table.factorize(q)) {
      if (m % p != 0 && h % p != 0) weight *= 1 - p;
    }
    sum += weight * t_sum(table, N, h, m, q, r);
  }
  return sum;
}

template <class V>
V delta_form2(const ArithTable& table, std::int64_t N, std::int64_t h, unsigned threads) {
  require_range(table, N);
  if (h < 1) throw std::invalid_argument("delta_form2 needs h >= 1, got " + std::to_string(h));
  using W = Weights<V>;
  const auto coeffs = wintner_lambda_coeffs<V>(table, N);
  // Group moduli by t = (q, h), in ascending t then q.
  std::vector<std::int64_t> moduli;
  for (std::int64_t t = 1; t <= std::min(h, N); ++t) {
    if (h % t != 0) continue;
    for (std::int64_t q = 3; q <= N; ++q) {
      if (table.mu(q) != 0 && gcd(q, h) == t) moduli.push_back(q);
    }
  }
  const auto terms = parallel_map<V>(moduli.size(), threads, [&](std::size_t i) {
    const std::int64_t q = moduli[i];
    const std::int64_t t = gcd(q, h);
    Accumulator<V> inner;
    for (std::int64_t r = 1; r <= N; ++r) {
      if (table.mu(r) == 0 || gcd(r, q) != 1) continue;
      const std::int64_t phi_value = phi_sum(table, N, h, q, r);
      if (phi_value == 0) continue;
      inner.add(scale(wintner_lambda_coeff<V>(table, N, r, q), W::scalar(phi_value)));
    }
    return scale(coeffs[q] * inner.value(), W::ratio(table.mu(t) * table.phi(t), table.phi(q)));
  });
  return sum_in_order(terms);
}

DeltaReport delta_report(const ArithTable& table, std::int64_t N, std::int64_t h, EvalMode mode, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  DeltaReport rep;
  rep.N = N;
  rep.h = h;
  rep.mode = mode;
  auto fill = [&]<class V>() {
    std::vector<V> routes{delta_direct<V>(table, N, h, threads), delta_via_corr<V>(table, N, h),
                          delta_form1<V>(table, N, h, threads)};
    if (h >= 1) routes.push_back(delta_form2<V>(table, N, h, threads));
    auto value = [](const V& v) {
      if constexpr (std::is_same_v<V, double>) {
        return v;
      } else {
        return v.eval();
      }
    };
    rep.delta_direct = value(routes[0]);
    rep.delta_via_corr = value(routes[1]);
    rep.delta_form1 = value(routes[2]);
    if (routes.size() > 3) rep.delta_form2 = value(routes[3]);
    rep.remainder_r = value(remainder_r<V>(table, N, h));
    rep.corr = value(corr_lambda_lambdaN<V>(table, N, h));
    rep.expansion_rhs = value(expansion_rhs<V>(table, N, h));
    double worst = 0;
    for (std::size_t i = 0; i < routes.size(); ++i) {
      for (std::size_t j = i + 1; j < routes.size(); ++j) {
        worst = std::max(worst, std::fabs(value(routes[i] - routes[j])));
      }
    }
    rep.max_pairwise_discrepancy = worst;
    if constexpr (std::is_same_v<V, LogForm>) rep.delta_exact = routes[0].to_string();
  };
  if (mode == EvalMode::Exact) {
    fill.template operator()<LogForm>();
  } else {
    fill.template operator()<double>();
  }
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

HLReport hl_experiment(const ArithTable& table, std::int64_t N, std::int64_t k, std::int64_t Q,
                       std::int64_t prime_bound) {
  if (k < 1) throw std::invalid_argument("twin gap parameter k must be positive");
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t h = 2 * k;
  require_shift(table, N, h);
  table.check(Q);
  HLReport rep;
  rep.N = N;
  rep.k = k;
  rep.Q = Q;
  rep.prime_bound = prime_bound;
  const double n = static_cast<double>(N);
  rep.corr_over_N = corr_lambda_lambda<double>(table, N, h) / n;
  rep.expansion_over_N = expansion_rhs<double>(table, N, h) / n;
  rep.singular_truncated = singular_series_truncated(table, h, Q);
  rep.singular_euler = singular_series_euler(k, prime_bound);
  rep.tail_correction = corr_tail<double>(table, N, h) / n;
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<std::pair<std::int64_t, double>> delta_trend(const ArithTable& table, std::span<const std::int64_t> grid,
                                                          std::int64_t h, EvalMode mode, unsigned threads) {
  std::vector<std::pair<std::int64_t, double>> out;
  out.reserve(grid.size());
  for (const std::int64_t N : grid) {
    const double delta = weight_value(dispatch(mode, [&]<class V>() { return delta_direct<V>(table, N, h, threads); }));
    out.emplace_back(N, delta / static_cast<double>(N));
  }
  return out;
}

#define NT_INSTANTIATE(V)                                                                               \
  template V psi_apc<V>(const ArithTable&, std::int64_t, std::int64_t, std::int64_t);                   \
  template V corr_lambda_lambdaN<V>(const ArithTable&, std::int64_t, std::int64_t);                     \
  template V corr_lambda_lambda<V>(const ArithTable&, std::int64_t, std::int64_t);                      \
  template V corr_tail<V>(const ArithTable&, std::int64_t, std::int64_t);                               \
  template V delta_modulus_term<V>(const ArithTable&, std::int64_t, std::int64_t, std::int64_t);        \
  template V delta_direct<V>(const ArithTable&, std::int64_t, std::int64_t, unsigned);                  \
  template V delta_direct_centered<V>(const ArithTable&, std::int64_t, std::int64_t);                   \
  template V lambda_ramanujan_moment<V>(const ArithTable&, std::int64_t, std::int64_t);                 \
  template V lambda_ramanujan_moment_direct<V>(const ArithTable&, std::int64_t, std::int64_t);          \
  template V expansion_rhs<V>(const ArithTable&, std::int64_t, std::int64_t);                           \
  template V expansion_rhs_direct<V>(const ArithTable&, std::int64_t, std::int64_t);                    \
  template V remainder_r<V>(const ArithTable&, std::int64_t, std::int64_t, RemainderModuli);            \
  template V delta_via_corr<V>(const ArithTable&, std::int64_t, std::int64_t);                          \
  template V delta_form1<V>(const ArithTable&, std::int64_t, std::int64_t, unsigned);                   \
  template V delta_form2<V>(const ArithTable&, std::int64_t, std::int64_t, unsigned);

NT_INSTANTIATE(double)
NT_INSTANTIATE(LogForm)

#undef NT_INSTANTIATE

}  // namespace nt

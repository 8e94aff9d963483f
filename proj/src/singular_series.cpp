#include <cmath>
#include <stdexcept>

#include "nt/correlation.hpp"
#include "nt/ramanujan.hpp"

namespace nt {

double singular_series_truncated(const ArithTable& table, std::int64_t h, std::int64_t Q) {
  if (Q < 1) throw std::invalid_argument("truncation Q must be positive");
  table.check(Q);
  Accumulator<double> sum;
  for (std::int64_t q = 1; q <= Q; ++q) {
    if (table.mu(q) == 0) continue;
    const std::int64_t c = ramanujan_sum(table, q, h);
    if (c == 0) continue;
    const double phi = static_cast<double>(table.phi(q));
    sum.add(static_cast<double>(c) / (phi * phi));
  }
  return sum.value();
}

double singular_series_euler(std::int64_t k, std::int64_t prime_bound) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (prime_bound < 2) throw std::invalid_argument("prime bound must be at least 2");
  const ArithTable primes(prime_bound);
  double log_product = std::log(2.0);
  for (const std::uint32_t p : primes.primes()) {
    if (p == 2) continue;
    const double pm1 = static_cast<double>(p) - 1.0;
    log_product += std::log1p(-1.0 / (pm1 * pm1));
    if (k % p == 0) log_product += std::log(pm1 / (pm1 - 1.0));
  }
  return std::exp(log_product);
}

}  // namespace nt

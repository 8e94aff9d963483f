#include "nt/ramanujan.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>

#include "nt/errors.hpp"

namespace nt {
namespace {

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) throw std::invalid_argument(std::string(name) + " must be positive, got " + std::to_string(v));
}

void require_squarefree_divisor(const ArithTable& table, std::int64_t q, std::int64_t d) {
  table.check(q);
  if (!table.is_squarefree(q)) throw DomainError("modulus " + std::to_string(q) + " is not squarefree");
  if (d < 1 || q % d != 0) {
    throw DomainError(std::to_string(d) + " does not divide " + std::to_string(q));
  }
}

}  // namespace

std::int64_t ramanujan_sum(const ArithTable& table, std::int64_t q, std::int64_t n) {
  table.check(q);
  const std::int64_t g = gcd(n, q);  // gcd(0, q) = q
  // Squarefree q: μ(q/g) = μ(q) μ(g) and φ(q)/φ(q/g) = φ(g), no division.
  if (const int mu_q = table.mu(q); mu_q != 0) return mu_q * table.mu(g) * table.phi(g);
  const std::int64_t m = q / g;
  const int mu = table.mu(m);
  if (mu == 0) return 0;
  return mu * (table.phi(q) / table.phi(m));
}

std::int64_t ramanujan_sum_bruteforce(std::int64_t q, std::int64_t n) {
  require_positive(q, "q");
  const std::int64_t r = mod_floor(n, q);
  double re = 0.0;
  double im = 0.0;
  for (std::int64_t j = 1; j <= q; ++j) {
    if (gcd(j, q) != 1) continue;
    // reduce jn mod q before scaling to keep the angle accurate
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * r) % q) / static_cast<double>(q);
    re += std::cos(angle);
    im += std::sin(angle);
  }
  const double rounded = std::round(re);
  if (std::fabs(im) > 1e-6 || std::fabs(re - rounded) > 1e-6) {
    throw NumericError("exponential sum for c_" + std::to_string(q) + "(" + std::to_string(n) +
                       ") is not an integer: " + std::to_string(re) + " + " + std::to_string(im) + "i");
  }
  return static_cast<std::int64_t>(rounded);
}

Rational cohen_mean(const ArithTable& table, std::int64_t q, std::int64_t h) {
  table.check(q);
  std::int64_t sum = 0;
  for (std::int64_t k = 1; k <= q; ++k) {
    if (gcd(k, q) == 1) sum += ramanujan_sum(table, q, k + h);
  }
  return make_rational(sum, table.phi(q));
}

Rational cohen_mean_closed(const ArithTable& table, std::int64_t q, std::int64_t h) {
  return make_rational(table.mu(q) * ramanujan_sum(table, q, h), table.phi(q));
}

Rational brauer_rademacher(const ArithTable& table, std::int64_t q, std::int64_t d, std::int64_t n) {
  require_squarefree_divisor(table, q, d);
  Rational sum;
  for (const std::int64_t t : table.divisors(q / d)) {
    if (gcd(t, n) != 1) continue;
    sum += make_rational(t * table.mu(q / (t * d)), table.phi(t * d));
  }
  return sum;
}

Rational brauer_rademacher_split(const ArithTable& table, std::int64_t q, std::int64_t d, std::int64_t n) {
  require_squarefree_divisor(table, q, d);
  Rational sum;
  for (const std::int64_t t : table.divisors(q / d)) {
    if (gcd(t, n) != 1) continue;
    sum += make_rational(t * table.mu(q / (t * d)), table.phi(t));
  }
  return sum / Rational(static_cast<long>(table.phi(d)));
}

Rational brauer_rademacher_closed(const ArithTable& table, std::int64_t q, std::int64_t d, std::int64_t n) {
  require_squarefree_divisor(table, q, d);
  return make_rational(table.mu(q / d) * ramanujan_sum(table, q / d, n), table.phi(q));
}

std::int64_t s_sum(const ArithTable& table, std::int64_t N, std::int64_t q, std::int64_t k, std::int64_t r) {
  require_positive(q, "q");
  table.check(r);
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  std::int64_t sum = 0;
  for (std::int64_t n = mod_floor(k - 1, q) + 1; n <= N; n += q) sum += ramanujan_sum(table, r, n);
  return sum;
}

std::int64_t progression_count(std::int64_t N, std::int64_t q, std::int64_t k) {
  const std::int64_t first = mod_floor(k - 1, q) + 1;
  return first > N ? 0 : (N - first) / q + 1;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod_floor(a, m);
  std::int64_t r = m;
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - quot * r};
    std::tie(old_s, s) = std::pair{s, old_s - quot * s};
  }
  if (old_r != 1) {
    throw DomainError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return mod_floor(old_s, m);
}

std::int64_t crt_solution(std::int64_t k, std::int64_t t, std::int64_t q, std::int64_t r) {
  require_positive(q, "q");
  require_positive(r, "r");
  if (gcd(q, r) != 1) {
    throw DomainError("moduli " + std::to_string(q) + " and " + std::to_string(r) + " are not coprime");
  }
  const std::int64_t qr = q * r;
  const std::int64_t r_inv = mod_inverse(r, q);
  const std::int64_t q_inv = mod_inverse(q, r);
  const std::int64_t x = mod_floor(mod_floor(k, q) * r_inv % qr * r + mod_floor(t, r) * q_inv % qr * q, qr);
  return x == 0 ? qr : x;
}

int s_sum_nu(std::int64_t N, std::int64_t q, std::int64_t r, std::int64_t k, std::int64_t t) {
  const std::int64_t rem = N % (q * r);
  return crt_solution(k, t, q, r) <= rem ? 1 : 0;
}

std::int64_t s_sum_closed(const ArithTable& table, std::int64_t N, std::int64_t q, std::int64_t k,
                          std::int64_t r) {
  require_positive(q, "q");
  table.check(r);
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  if (q % r == 0) return ramanujan_sum(table, r, k) * progression_count(N, q, k);
  if (gcd(q, r) != 1) {
    throw DomainError("closed form needs r | q or gcd(q, r) = 1; got q=" + std::to_string(q) +
                      ", r=" + std::to_string(r));
  }
  const std::int64_t blocks = N / (q * r);
  std::int64_t sum = 0;
  for (std::int64_t t = 1; t <= r; ++t) {
    sum += ramanujan_sum(table, r, t) * (blocks + s_sum_nu(N, q, r, k, t));
  }
  return sum;
}

}  // namespace nt

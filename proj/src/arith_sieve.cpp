#include "nt/arith_sieve.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "nt/errors.hpp"

namespace nt {

ArithTable::ArithTable(std::int64_t limit) : limit_(limit) {
  if (limit < 2) {
    throw std::invalid_argument("sieve limit must be at least 2, got " + std::to_string(limit));
  }
  if (limit > std::numeric_limits<std::uint32_t>::max() - 1) {
    throw RangeError("sieve limit too large: " + std::to_string(limit));
  }
  const auto n = static_cast<std::size_t>(limit);
  spf_.assign(n + 1, 0);
  mu_.assign(n + 1, 0);
  phi_.assign(n + 1, 0);
  mu_[1] = 1;
  phi_[1] = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      mu_[i] = -1;
      phi_[i] = static_cast<std::uint32_t>(i - 1);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (const std::uint32_t p : primes_) {
      const std::size_t ip = i * p;
      if (p > spf_[i] || ip > n) break;
      spf_[ip] = p;
      if (p == spf_[i]) {
        mu_[ip] = 0;
        phi_[ip] = phi_[i] * p;
      } else {
        mu_[ip] = static_cast<std::int8_t>(-mu_[i]);
        phi_[ip] = phi_[i] * (p - 1);
      }
    }
  }
}

void ArithTable::throw_out_of_range(std::int64_t n) const {
  throw RangeError("argument " + std::to_string(n) + " outside sieve range [1, " + std::to_string(limit_) + "]");
}

std::int64_t ArithTable::spf(std::int64_t n) const {
  check(n);
  if (n == 1) throw std::invalid_argument("spf undefined at 1");
  return spf_[static_cast<std::size_t>(n)];
}

bool ArithTable::is_prime(std::int64_t n) const {
  check(n);
  return n >= 2 && spf_[static_cast<std::size_t>(n)] == n;
}

Factorization ArithTable::factorize(std::int64_t n) const {
  check(n);
  Factorization out;
  auto m = static_cast<std::size_t>(n);
  while (m > 1) {
    const std::uint32_t p = spf_[m];
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

std::vector<std::int64_t> ArithTable::divisors(std::int64_t n) const {
  std::vector<std::int64_t> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int ArithTable::omega(std::int64_t n) const { return static_cast<int>(factorize(n).size()); }

std::int64_t ArithTable::tau(std::int64_t n) const {
  std::int64_t t = 1;
  for (const auto& pp : factorize(n)) t *= pp.exponent + 1;
  return t;
}

int ArithTable::v_p(std::int64_t p, std::int64_t n) const {
  check(n);
  if (p < 2 || p > limit_ || !is_prime(p)) {
    throw std::invalid_argument("v_p requires a prime, got " + std::to_string(p));
  }
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t ArithTable::prime_power_base(std::int64_t n) const {
  check(n);
  if (n == 1) return 0;
  const std::uint32_t p = spf_[static_cast<std::size_t>(n)];
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

ArithTable build_sieve(std::int64_t limit) { return ArithTable(limit); }

// Binary gcd; noticeably faster than Euclid's division loop on the hot
// Ramanujan-sum paths.
std::int64_t gcd(std::int64_t a, std::int64_t b) {
  std::uint64_t u = a < 0 ? -static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  std::uint64_t v = b < 0 ? -static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  if (u == 0) return static_cast<std::int64_t>(v);
  if (v == 0) return static_cast<std::int64_t>(u);
  const int shift = __builtin_ctzll(u | v);
  u >>= __builtin_ctzll(u);
  do {
    v >>= __builtin_ctzll(v);
    if (u > v) std::swap(u, v);
    v -= u;
  } while (v != 0);
  return static_cast<std::int64_t>(u << shift);
}

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace nt

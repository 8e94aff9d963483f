#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace nt {

struct PrimePower {
  std::int64_t prime;
  int exponent;

  bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

// Smallest-prime-factor, Moebius and totient tables up to a fixed limit,
// filled by a single linear-sieve pass. Immutable after construction.
class ArithTable {
 public:
  explicit ArithTable(std::int64_t limit);

  std::int64_t limit() const { return limit_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  std::int64_t spf(std::int64_t n) const;
  int mu(std::int64_t n) const {
    check(n);
    return mu_[static_cast<std::size_t>(n)];
  }
  std::int64_t phi(std::int64_t n) const {
    check(n);
    return phi_[static_cast<std::size_t>(n)];
  }
  bool is_prime(std::int64_t n) const;

  Factorization factorize(std::int64_t n) const;
  std::vector<std::int64_t> divisors(std::int64_t n) const;
  int omega(std::int64_t n) const;
  std::int64_t tau(std::int64_t n) const;
  int v_p(std::int64_t p, std::int64_t n) const;
  bool is_squarefree(std::int64_t n) const { return mu(n) != 0; }

  // p when n = p^a for a prime p and a >= 1, otherwise 0. Λ(n) = log of this.
  std::int64_t prime_power_base(std::int64_t n) const;

  // Throws RangeError unless 1 <= n <= limit.
  void check(std::int64_t n) const {
    if (n < 1 || n > limit_) [[unlikely]] throw_out_of_range(n);
  }

 private:
  [[noreturn]] void throw_out_of_range(std::int64_t n) const;

  std::int64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint32_t> phi_;
  std::vector<std::uint32_t> primes_;
};

// Throws std::invalid_argument when limit < 2.
ArithTable build_sieve(std::int64_t limit);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

// Representative of n modulo m in [0, m).
inline std::int64_t mod_floor(std::int64_t n, std::int64_t m) {
  const std::int64_t r = n % m;
  return r < 0 ? r + m : r;
}

}  // namespace nt

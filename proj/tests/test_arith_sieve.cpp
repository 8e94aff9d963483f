#include <numeric>

#include "doctest.h"
#include "nt/arith_sieve.hpp"
#include "nt/errors.hpp"

using nt::ArithTable;

namespace {

// Trial-division oracles, independent of the sieve.
std::vector<std::pair<std::int64_t, int>> trial_factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int mu_oracle(std::int64_t n) {
  int sign = 1;
  for (const auto& [p, e] : trial_factor(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t phi_oracle(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

}  // namespace

TEST_CASE("sieve values match trial division") {
  const ArithTable t(2000);
  for (std::int64_t n = 1; n <= 2000; ++n) {
    CHECK(t.mu(n) == mu_oracle(n));
    CHECK(t.phi(n) == phi_oracle(n));
    const auto f = trial_factor(n);
    CHECK(t.is_prime(n) == (f.size() == 1 && f[0].second == 1));
    const auto g = t.factorize(n);
    REQUIRE(g.size() == f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(g[i].prime == f[i].first);
      CHECK(g[i].exponent == f[i].second);
    }
    if (n > 1) CHECK(t.spf(n) == f.front().first);
  }
}

TEST_CASE("divisors enumerate by brute force") {
  const ArithTable t(500);
  for (std::int64_t n = 1; n <= 500; ++n) {
    std::vector<std::int64_t> brute;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) brute.push_back(d);
    }
    CHECK(t.divisors(n) == brute);
    CHECK(t.tau(n) == static_cast<std::int64_t>(brute.size()));
  }
}

TEST_CASE("documented small values") {
  const ArithTable t(20);
  CHECK(t.mu(1) == 1);
  CHECK(t.phi(10) == 4);
  CHECK(t.mu(12) == 0);
  CHECK(t.factorize(1).empty());
  CHECK(t.omega(12) == 2);
  CHECK(t.tau(12) == 6);
  CHECK(t.v_p(2, 12) == 2);
  CHECK(t.is_squarefree(15));
  CHECK_FALSE(t.is_squarefree(18));
  CHECK(t.prime_power_base(8) == 2);
  CHECK(t.prime_power_base(9) == 3);
  CHECK(t.prime_power_base(6) == 0);
  CHECK(t.prime_power_base(1) == 0);
  const ArithTable big(100);
  const auto f97 = big.factorize(97);
  REQUIRE(f97.size() == 1);
  CHECK(f97[0].prime == 97);
  CHECK(big.is_squarefree(30));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(ArithTable(1), std::invalid_argument);
  const ArithTable t(50);
  CHECK_THROWS_AS(t.mu(51), nt::RangeError);
  CHECK_THROWS_AS(t.phi(0), nt::RangeError);
  CHECK_THROWS_AS(t.v_p(4, 12), std::invalid_argument);
}

TEST_CASE("gcd, lcm and mod_floor") {
  CHECK(nt::gcd(12, 18) == 6);
  CHECK(nt::gcd(0, 7) == 7);
  CHECK(nt::lcm(4, 6) == 12);
  CHECK(nt::mod_floor(-1, 5) == 4);
  CHECK(nt::mod_floor(10, 5) == 0);
}

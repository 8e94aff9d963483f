#include <cmath>
#include <complex>
#include <numeric>

#include "doctest.h"
#include "nt/errors.hpp"
#include "nt/ramanujan.hpp"

using nt::Rational;

namespace {

// Σ_{(j,q)=1} e(jn/q), summed here independently of the library.
std::int64_t exp_sum(std::int64_t q, std::int64_t n) {
  std::complex<double> s = 0;
  for (std::int64_t j = 1; j <= q; ++j) {
    if (std::gcd(j, q) != 1) continue;
    s += std::polar(1.0, 2 * M_PI * static_cast<double>((j * n) % q) / static_cast<double>(q));
  }
  return std::llround(s.real());
}

}  // namespace

TEST_CASE("closed form against exponential sums") {
  const nt::ArithTable t(400);
  for (std::int64_t q = 1; q <= 120; ++q) {
    for (std::int64_t n = -5; n <= 130; ++n) CHECK(nt::ramanujan_sum(t, q, n) == exp_sum(q, ((n % q) + q) % q));
  }
  CHECK(nt::ramanujan_sum(t, 1, 5) == 1);
  CHECK(nt::ramanujan_sum(t, 6, 6) == 2);
  CHECK(nt::ramanujan_sum(t, 4, 2) == -2);
  CHECK(nt::ramanujan_sum(t, 5, 3) == -1);
  CHECK(nt::ramanujan_sum(t, 6, 0) == 2);
  CHECK(nt::ramanujan_sum_bruteforce(4, 2) == -2);
  CHECK(nt::ramanujan_sum_bruteforce(1, 0) == 1);
}

TEST_CASE("cohen mean") {
  const nt::ArithTable t(200);
  CHECK(nt::cohen_mean(t, 2, 1) == Rational(1));
  CHECK(nt::cohen_mean(t, 4, 0) == Rational(0));
  for (std::int64_t h = 0; h < 10; ++h) CHECK(nt::cohen_mean(t, 1, h) == Rational(1));
  for (std::int64_t q = 1; q <= 60; ++q) {
    for (std::int64_t h = -3; h <= 60; ++h) CHECK(nt::cohen_mean(t, q, h) == nt::cohen_mean_closed(t, q, h));
  }
}

TEST_CASE("brauer-rademacher") {
  const nt::ArithTable t(200);
  CHECK(nt::brauer_rademacher(t, 6, 3, 1) == Rational(1, 2));
  CHECK(nt::brauer_rademacher(t, 6, 1, 2) == Rational(-1, 2));
  CHECK(nt::brauer_rademacher(t, 7, 7, 4) == Rational(1, 6));
  for (std::int64_t q : {1, 2, 6, 30, 42, 70, 105}) {
    for (std::int64_t d : t.divisors(q)) {
      for (std::int64_t n = 0; n <= 40; ++n) {
        CHECK(nt::brauer_rademacher(t, q, d, n) == nt::brauer_rademacher_closed(t, q, d, n));
        CHECK(nt::brauer_rademacher_split(t, q, d, n) == nt::brauer_rademacher_closed(t, q, d, n));
      }
    }
  }
  CHECK_THROWS_AS(nt::brauer_rademacher(t, 12, 3, 1), nt::DomainError);
  CHECK_THROWS_AS(nt::brauer_rademacher(t, 6, 5, 1), nt::DomainError);
}

TEST_CASE("progression sums") {
  const nt::ArithTable t(2000);
  CHECK(nt::s_sum(t, 10, 3, 1, 1) == 4);
  CHECK(nt::s_sum(t, 10, 4, 1, 2) == -3);
  CHECK(nt::s_sum_closed(t, 10, 4, 1, 2) == -3);
  CHECK(nt::s_sum_closed(t, 12, 2, 1, 3) == nt::s_sum(t, 12, 2, 1, 3));
  CHECK(nt::s_sum(t, 0, 3, 1, 2) == 0);
  for (std::int64_t q = 1; q <= 15; ++q) {
    for (std::int64_t r = 1; r <= 15; ++r) {
      if (std::gcd(q, r) != 1) continue;
      for (std::int64_t k = 1; k <= q; ++k) {
        if (r >= 2) CHECK(nt::s_sum(t, q * r, q, k, r) == 0);
        for (std::int64_t N = 0; N <= 2 * q * r; N += 3) {
          CHECK(nt::s_sum_closed(t, N, q, k, r) == nt::s_sum(t, N, q, k, r));
          if (r == 1) CHECK(nt::s_sum_closed(t, N, q, k, 1) == nt::progression_count(N, q, k));
        }
      }
    }
  }
  CHECK_THROWS_AS(nt::s_sum_closed(t, 10, 4, 1, 6), nt::DomainError);
}

TEST_CASE("crt and inverses") {
  CHECK(nt::crt_solution(1, 1, 2, 3) == 1);
  CHECK(nt::crt_solution(1, 2, 2, 3) == 5);
  CHECK(nt::crt_solution(0, 0, 4, 7) == 28);
  for (std::int64_t q = 1; q <= 12; ++q) {
    for (std::int64_t r = 1; r <= 12; ++r) {
      if (std::gcd(q, r) != 1) continue;
      for (std::int64_t k = 0; k < q; ++k) {
        for (std::int64_t s = 0; s < r; ++s) {
          const std::int64_t n = nt::crt_solution(k, s, q, r);
          CHECK(n >= 1);
          CHECK(n <= q * r);
          CHECK(n % q == k);
          CHECK(n % r == s);
        }
      }
    }
  }
  CHECK(nt::mod_inverse(3, 7) == 5);
  CHECK(nt::mod_inverse(5, 1) == 0);
  CHECK_THROWS_AS(nt::mod_inverse(4, 6), nt::DomainError);
  CHECK_THROWS_AS(nt::crt_solution(1, 1, 4, 6), nt::DomainError);
}

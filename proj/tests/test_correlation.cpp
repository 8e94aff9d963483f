#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "nt/correlation.hpp"
#include "nt/errors.hpp"
#include "nt/ramanujan.hpp"

using nt::LogForm;
using nt::Rational;

namespace {

const nt::ArithTable& table() {
  static const nt::ArithTable t(5000);
  return t;
}

double lam(std::int64_t n) { return nt::von_mangoldt(table(), n).eval(); }

LogForm L(std::uint32_t p) { return LogForm::log_prime(p); }

// The double sum over (q, r) with plain, unrestricted coefficients on r.
double form1_unrestricted(std::int64_t N, std::int64_t h) {
  const auto& t = table();
  double s = 0;
  for (std::int64_t q = 3; q <= N; ++q) {
    for (std::int64_t r = 1; r <= N; ++r) {
      if (std::gcd(q, r) != 1) continue;
      s += nt::wintner_lambda_coeff<double>(t, N, q) * nt::wintner_lambda_coeff<double>(t, N, r) *
           nt::d_n_sum_ratio(t, N, h, q, r).to_double();
    }
  }
  return s;
}

// The character-sum regrouping with the weights μ(q)φ(q) m φ(m) (t = 1) and
// m φ(m) (t > 1), the principal character kept, and plain coefficients.
double form2_uncorrected(std::int64_t N, std::int64_t h) {
  const auto& t = table();
  double s = 0;
  for (const std::int64_t d : t.divisors(h)) {
    for (std::int64_t q = 3; q <= N; ++q) {
      if (std::gcd(q, h) != d || t.mu(q) == 0) continue;
      for (std::int64_t r = 1; r <= N; ++r) {
        if (std::gcd(r, q) != 1) continue;
        double weight = 0;
        for (const std::int64_t m : t.divisors(q)) {
          if (d == 1) {
            weight += static_cast<double>(t.mu(q) * t.phi(q) * m * t.phi(m) * nt::t_sum(t, N, h, m, q, r));
          } else if (std::gcd(m, h) == 1) {
            weight += static_cast<double>(m * t.phi(m) * nt::t_sum(t, N, h, m, q, r));
          }
        }
        s += t.mu(d) * t.phi(d) * nt::wintner_lambda_coeff<double>(t, N, q) / t.phi(q) *
             nt::wintner_lambda_coeff<double>(t, N, r) * weight;
      }
    }
  }
  return s;
}

}  // namespace

TEST_CASE("progression sums of the von Mangoldt function") {
  const auto& t = table();
  CHECK(nt::psi_apc<LogForm>(t, 10, 3, 1) == L(2) + L(7));
  CHECK(nt::psi_apc<LogForm>(t, 10, 1, 1) == nt::log_form(t, 2520));
  CHECK(nt::psi_apc<LogForm>(t, 1, 7, 3).is_zero());
  CHECK(nt::psi_apc<double>(t, 100, 4, -1) == doctest::Approx(nt::psi_apc<double>(t, 100, 4, 3)));
}

TEST_CASE("deviation") {
  const auto& t = table();
  for (std::int64_t h = -5; h <= 20; ++h) CHECK(nt::deviation(t, h, 2, 1) == 0);
  for (std::int64_t q = 1; q <= 40; ++q) {
    Rational total = 0;
    for (std::int64_t k = 1; k <= q; ++k) {
      if (std::gcd(k, q) != 1) continue;
      CHECK(nt::deviation(t, 0, q, k) == 0);
      total += nt::deviation(t, 7, q, k);
    }
    CHECK(total == 0);
  }
  CHECK(nt::deviation(t, 1, 3, 1) == Rational(-3, 2));
}

TEST_CASE("correlations against brute force") {
  const auto& t = table();
  CHECK(nt::corr_lambda_lambdaN<LogForm>(t, 2, 1).is_zero());
  CHECK(nt::corr_lambda_lambdaN<LogForm>(t, 3, 1) == (L(2) * L(3)) * Rational(2));
  CHECK(nt::corr_lambda_lambda<LogForm>(t, 3, 2) == L(2) * L(2) + L(3) * L(5));
  CHECK(nt::corr_lambda_lambda<LogForm>(t, 2, 1) == L(2) * L(3));
  CHECK(nt::corr_tail<LogForm>(t, 2, 1) == -(L(2) * L(3)));
  for (std::int64_t N = 1; N <= 60; ++N) {
    LogForm squares;
    for (std::int64_t m = 1; m <= N; ++m) squares += nt::von_mangoldt(t, m) * nt::von_mangoldt(t, m);
    CHECK(nt::corr_lambda_lambdaN<LogForm>(t, N, 0) == squares);
  }
  for (std::int64_t N : {7, 30, 64}) {
    for (std::int64_t h = 0; h <= 15; ++h) {
      double direct = 0, truncated = 0;
      for (std::int64_t m = 1; m <= N; ++m) {
        direct += lam(m) * lam(m + h);
        double lam_n = 0;
        for (std::int64_t d = 2; d <= N; ++d) {
          if ((m + h) % d == 0) lam_n -= t.mu(d) * std::log(static_cast<double>(d));
        }
        truncated += lam(m) * lam_n;
      }
      CHECK(nt::corr_lambda_lambda<double>(t, N, h) == doctest::Approx(direct).epsilon(1e-12));
      CHECK(nt::corr_lambda_lambdaN<double>(t, N, h) == doctest::Approx(truncated).epsilon(1e-12));
    }
  }
  CHECK(nt::corr_tail<LogForm>(t, 47, 2).is_zero());  // d ∈ {48, 49}
  CHECK_THROWS_AS(nt::corr_lambda_lambda<double>(t, 10, -1), std::invalid_argument);
}

TEST_CASE("exact tail identity") {
  const auto& t = table();
  for (std::int64_t N = 1; N <= 60; ++N) {
    for (std::int64_t h = 1; h <= 20; ++h) {
      CHECK(nt::corr_lambda_lambda<LogForm>(t, N, h) ==
            nt::corr_lambda_lambdaN<LogForm>(t, N, h) - nt::corr_tail<LogForm>(t, N, h));
    }
  }
}

TEST_CASE("moments and the expansion term") {
  const auto& t = table();
  for (std::int64_t N : {1, 5, 12, 40}) {
    for (std::int64_t q = 1; q <= N; ++q) {
      CHECK(nt::lambda_ramanujan_moment<LogForm>(t, N, q) == nt::lambda_ramanujan_moment_direct<LogForm>(t, N, q));
    }
    for (std::int64_t h = 0; h <= 6; ++h) {
      CHECK(nt::expansion_rhs<LogForm>(t, N, h) == nt::expansion_rhs_direct<LogForm>(t, N, h));
    }
  }
  CHECK(nt::expansion_rhs<LogForm>(t, 1, 3).is_zero());
  // N = 2, h = 1: coefficients (log 2)/2 at q = 1, 2, moments log 2 and log 2 · c_2(2).
  CHECK(nt::expansion_rhs<LogForm>(t, 2, 1) == (L(2) * L(2)) * Rational(1, 2) - (L(2) * L(2)) * Rational(1, 2));
}

TEST_CASE("remainder") {
  const auto& t = table();
  CHECK(nt::remainder_r<LogForm>(t, 3, 1).is_zero());
  for (std::int64_t N = 1; N <= 100; N += 9) {
    for (std::int64_t h = 0; h <= 12; ++h) {
      CHECK(nt::remainder_r<LogForm>(t, N, h, nt::RemainderModuli::Squarefree) ==
            nt::remainder_r<LogForm>(t, N, h, nt::RemainderModuli::SquarefreeComposite));
    }
  }
  // Brute force over all pairs with gcd(n, q) > 1.
  for (std::int64_t N : {6, 15, 30}) {
    for (std::int64_t h = 0; h <= 5; ++h) {
      double brute = 0;
      for (std::int64_t n = 1; n <= N; ++n) {
        for (std::int64_t q = 1; q <= N; ++q) {
          if (std::gcd(n, q) == 1) continue;
          brute += lam(n) * nt::wintner_lambda_coeff<double>(t, N, q) *
                   (nt::ramanujan_sum(t, q, n + h) - static_cast<double>(nt::ramanujan_sum(t, q, n) *
                                                                         nt::ramanujan_sum(t, q, h)) /
                                                         t.phi(q));
        }
      }
      CHECK(nt::remainder_r<double>(t, N, h) == doctest::Approx(brute).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("deviation sum: frozen values from an independent implementation") {
  const auto& t = table();
  CHECK(nt::delta_direct<double>(t, 10, 1) == doctest::Approx(-1.686256385009641).epsilon(1e-13));
  CHECK(nt::delta_direct<double>(t, 10, 2) == doctest::Approx(1.5179237747719594).epsilon(1e-13));
  CHECK(nt::delta_direct<double>(t, 20, 3) == doctest::Approx(-2.505017120909339).epsilon(1e-13));
  CHECK(nt::delta_direct<double>(t, 20, 6) == doctest::Approx(7.114006797796558).epsilon(1e-13));
}

TEST_CASE("deviation sum: trivial cases") {
  const auto& t = table();
  for (std::int64_t h = -4; h <= 12; ++h) {
    CHECK(nt::delta_direct<LogForm>(t, 2, h).is_zero());
    CHECK(nt::delta_via_corr<LogForm>(t, 2, std::abs(h)).is_zero());
    CHECK(nt::delta_form1<LogForm>(t, 2, h).is_zero());
    if (h >= 1) CHECK(nt::delta_form2<LogForm>(t, 2, h).is_zero());
  }
  for (std::int64_t N : {1, 5, 30}) {
    CHECK(nt::delta_direct<LogForm>(t, N, 0).is_zero());
    CHECK(nt::delta_via_corr<LogForm>(t, N, 0).is_zero());
    CHECK(nt::delta_form1<LogForm>(t, N, 0).is_zero());
  }
  CHECK_THROWS_AS(nt::delta_form2<double>(t, 10, 0), std::invalid_argument);
}

TEST_CASE("moduli 1 and 2 contribute nothing") {
  const auto& t = table();
  for (std::int64_t N = 2; N <= 60; N += 7) {
    for (std::int64_t h = -3; h <= 12; ++h) {
      CHECK(nt::delta_modulus_term<LogForm>(t, N, h, 1).is_zero());
      CHECK(nt::delta_modulus_term<LogForm>(t, N, h, 2).is_zero());
    }
  }
}

TEST_CASE("four routes agree exactly") {
  const auto& t = table();
  for (std::int64_t N : {5, 10, 20, 33}) {
    for (std::int64_t h = 1; h <= 8; ++h) {
      const LogForm direct = nt::delta_direct<LogForm>(t, N, h);
      CHECK(nt::delta_via_corr<LogForm>(t, N, h) == direct);
      CHECK(nt::delta_form1<LogForm>(t, N, h) == direct);
      CHECK(nt::delta_form2<LogForm>(t, N, h) == direct);
      double sum = 0;
      for (std::int64_t q = 1; q <= N; ++q) sum += nt::delta_modulus_term<double>(t, N, h, q);
      CHECK(sum == doctest::Approx(direct.eval()).epsilon(1e-12));
    }
  }
}

TEST_CASE("unrestricted coefficients break the prime-free double sum") {
  // With plain coefficients on r the sum no longer reproduces Δ; the
  // values are those of an independent implementation.
  CHECK(form1_unrestricted(10, 1) == doctest::Approx(-0.7769116993749026).epsilon(1e-12));
  CHECK(form1_unrestricted(20, 3) == doctest::Approx(-3.184733967904787).epsilon(1e-12));
  CHECK(form1_unrestricted(10, 1) != doctest::Approx(nt::delta_direct<double>(table(), 10, 1)));
  CHECK(form2_uncorrected(10, 1) == doctest::Approx(-31.04804122587069).epsilon(1e-12));
  CHECK(form2_uncorrected(20, 6) == doctest::Approx(-404.67143795870646).epsilon(1e-12));
}

TEST_CASE("centering does not change the deviation sum") {
  const auto& t = table();
  for (std::int64_t N = 10; N <= 100; N += 30) {
    for (std::int64_t h = 0; h <= 12; ++h) {
      const double a = nt::delta_direct<double>(t, N, h);
      CHECK(nt::delta_direct_centered<double>(t, N, h) == doctest::Approx(a).epsilon(1e-10).scale(1.0));
    }
  }
  CHECK(nt::delta_direct_centered<LogForm>(t, 25, 4) == nt::delta_direct<LogForm>(t, 25, 4));
}

TEST_CASE("D_N representations") {
  const auto& t = table();
  CHECK(nt::d_n_sum(t, 6, 0, 3, 1) == 0);
  CHECK(nt::d_n_sum(t, 6, 1, 3, 1) == 0);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> mod(1, 20), shift(0, 12), range(1, 60);
  int checked = 0;
  while (checked < 50) {
    const std::int64_t q = mod(rng), r = mod(rng);
    if (std::gcd(q, r) != 1) continue;
    const std::int64_t h = shift(rng), N = range(rng);
    CHECK(nt::d_n_sum(t, N, h, q, r) == nt::d_n_sum_progressions(t, N, h, q, r));
    ++checked;
  }
  CHECK_THROWS_AS(nt::d_n_sum(t, 10, 1, 4, 6), nt::DomainError);
}

TEST_CASE("character-sum routes") {
  const auto& t = table();
  for (std::int64_t q = 3; q <= 30; ++q) {
    if (!t.is_squarefree(q)) continue;
    for (std::int64_t r = 1; r <= 10; ++r) {
      if (std::gcd(q, r) != 1 || !t.is_squarefree(r)) continue;
      for (std::int64_t h = 1; h <= 10; ++h) {
        const std::int64_t N = 60;
        const std::int64_t a = nt::phi_sum_characters(t, N, h, q, r);
        CHECK(a == nt::phi_sum_divisors(t, N, h, q, r));
        CHECK(a == nt::phi_sum(t, N, h, q, r));
        // D_N = μ(t)φ(t)/φ(q) · Φ with t = (q, h).
        const std::int64_t g = std::gcd(q, h);
        CHECK(nt::d_n_sum(t, N, h, q, r) == nt::make_rational(t.mu(g) * t.phi(g) * a, t.phi(q)));
      }
    }
  }
  CHECK(nt::phi_sum(t, 12, 1, 6, 1) == nt::phi_sum_characters(t, 12, 1, 6, 1));
  for (std::int64_t N : {5, 17}) {
    std::int64_t expected = 0;
    for (std::int64_t n = 1; n <= N; ++n) {
      if (std::gcd(n, 15) == 1) expected += nt::ramanujan_sum(t, 4, n);
    }
    CHECK(nt::t_sum(t, N, 3, 1, 15, 4) == expected);
  }
  CHECK_THROWS_AS(nt::t_sum(t, 10, 1, 4, 12, 1), nt::DomainError);
  CHECK_THROWS_AS(nt::t_sum(t, 10, 1, 4, 6, 1), nt::DomainError);
}

TEST_CASE("singular series") {
  const auto& t = table();
  const double euler1 = nt::singular_series_euler(1, 1000000);
  CHECK(euler1 == doctest::Approx(1.3203236).epsilon(1e-6));
  CHECK(nt::singular_series_euler(3, 1000000) / euler1 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(nt::singular_series_euler(2, 1000) == doctest::Approx(nt::singular_series_euler(1, 1000)));
  const double trunc = nt::singular_series_truncated(t, 2, 5000);
  CHECK(trunc == doctest::Approx(euler1).epsilon(1e-2));
  for (std::int64_t h : {1, 3, 5}) CHECK(std::fabs(nt::singular_series_truncated(t, h, 5000)) <= 0.05);
  CHECK(nt::singular_series_truncated(t, 2, 1) == 1.0);
}

TEST_CASE("reports") {
  const auto& t = table();
  const auto r = nt::delta_report(t, 20, 3, nt::EvalMode::Exact);
  CHECK(r.max_pairwise_discrepancy == 0.0);
  CHECK(r.delta_form2.has_value());
  REQUIRE(r.delta_exact.has_value());
  CHECK(r.delta_direct == doctest::Approx(-2.505017120909339).epsilon(1e-13));
  CHECK(r.corr - r.expansion_rhs - r.remainder_r == doctest::Approx(r.delta_direct));
  const auto r0 = nt::delta_report(t, 20, 0, nt::EvalMode::Float);
  CHECK_FALSE(r0.delta_form2.has_value());
  CHECK(r0.delta_direct == 0.0);

  const auto hl = nt::hl_experiment(t, 1000, 3, 1000, 10000);
  CHECK(std::isfinite(hl.corr_over_N));
  CHECK(hl.singular_euler == doctest::Approx(2 * nt::singular_series_euler(1, 10000)));
  CHECK(hl.corr_over_N == doctest::Approx(nt::corr_lambda_lambda<double>(t, 1000, 6) / 1000));
  const auto tiny = nt::hl_experiment(t, 3, 5, 10, 100);
  CHECK(std::isfinite(tiny.corr_over_N));

  const std::vector<std::int64_t> grid{50, 100};
  const auto zeros = nt::delta_trend(t, grid, 0, nt::EvalMode::Float);
  for (const auto& [N, v] : zeros) CHECK(v == 0.0);
  const std::vector<std::int64_t> one{40};
  CHECK(nt::delta_trend(t, one, 2, nt::EvalMode::Exact).size() == 1);
}

TEST_CASE("thread count does not change results") {
  const auto& t = table();
  for (std::int64_t h : {1, 4}) {
    const double a = nt::delta_direct<double>(t, 150, h, 1);
    const double b = nt::delta_direct<double>(t, 150, h, 4);
    CHECK(a == b);
    CHECK(nt::delta_form2<double>(t, 40, h, 1) == nt::delta_form2<double>(t, 40, h, 3));
  }
}

#include <cmath>

#include "doctest.h"
#include "nt/errors.hpp"
#include "nt/arith_sieve.hpp"
#include "nt/logform.hpp"

using nt::LogForm;
using nt::Rational;

TEST_CASE("log of an integer") {
  const nt::ArithTable t(100);
  CHECK(nt::log_form(t, 1).is_zero());
  const LogForm l12 = nt::log_form(t, 12);
  CHECK(l12 == LogForm::log_prime(2, 2) + LogForm::log_prime(3));
  CHECK(nt::log_form(t, 10).eval() == doctest::Approx(2.302585092994046).epsilon(1e-15));
  for (std::int64_t n = 1; n <= 100; ++n) {
    CHECK(nt::log_form(t, n).eval() == doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-14));
  }
}

TEST_CASE("arithmetic is canonical") {
  const LogForm l2 = LogForm::log_prime(2);
  const LogForm l3 = LogForm::log_prime(3);
  CHECK((l2 + l2 * Rational(-1)).is_zero());
  CHECK((l2 - l2).to_string() == "0");
  const LogForm p = l2 * l3;
  CHECK(p.degree() == 2);
  REQUIRE(p.bilinear().size() == 1);
  CHECK(p.bilinear()[0].first == LogForm::PrimePair{2, 3});
  CHECK(l3 * l2 == p);
  const LogForm q = (l2 + l3) * l2;
  CHECK(q == l2 * l2 + l2 * l3);
  CHECK(q.term_count() == 2);
  CHECK((l2 + l3) - l3 == l2);
  CHECK(LogForm(Rational(1, 2)).degree() == 0);
}

TEST_CASE("evaluation") {
  CHECK(LogForm{}.eval() == 0.0);
  const LogForm p = LogForm::log_prime(2) * LogForm::log_prime(3);
  CHECK(p.eval() == doctest::Approx(std::log(2.0) * std::log(3.0)).epsilon(1e-15));
  CHECK(p.eval() == doctest::Approx(0.7615).epsilon(1e-5));
  CHECK(LogForm::log_prime(2, Rational(1, 2)).eval() == doctest::Approx(0.346574).epsilon(1e-6));
  CHECK(p.eval(nt::EvalPrecision::Extended) == doctest::Approx(p.eval()).epsilon(1e-15));
}

TEST_CASE("degree overflow") {
  const LogForm l2 = LogForm::log_prime(2);
  CHECK_THROWS_AS(l2 * l2 * l2, nt::DegreeError);
  CHECK_NOTHROW(LogForm(Rational(3)) * (l2 * l2));
}

TEST_CASE("printing") {
  const LogForm f = LogForm(Rational(1, 2)) + LogForm::log_prime(2, 2) -
                    LogForm::log_prime(3) * LogForm::log_prime(5);
  CHECK(f.to_string() == "1/2 + 2*log(2) - log(3)*log(5)");
  CHECK(LogForm{}.to_string() == "0");
}

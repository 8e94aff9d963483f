#include <numeric>

#include "doctest.h"
#include "nt/characters.hpp"
#include "nt/errors.hpp"
#include "nt/ramanujan.hpp"

using nt::CyclotomicElement;

TEST_CASE("cyclotomic arithmetic") {
  CHECK(nt::cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(nt::cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(nt::cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // 1 + ζ_3 + ζ_3² = 0
  CyclotomicElement s = CyclotomicElement::integer(1, 3);
  s += CyclotomicElement::root_of_unity(3, 1);
  s += CyclotomicElement::root_of_unity(3, 2);
  CHECK(s.is_zero());
  // ζ_4² = -1, and equality across orders
  const auto i = CyclotomicElement::root_of_unity(4, 1);
  CHECK(i * i == CyclotomicElement::integer(-1));
  CHECK(CyclotomicElement::root_of_unity(6, 3) == CyclotomicElement::integer(-1, 2));
  CHECK((i * i).integer_value() == -1);
  CHECK_THROWS_AS(i.integer_value(), nt::NumericError);
  const auto z = CyclotomicElement::root_of_unity(12, 5).to_complex();
  CHECK(z.real() == doctest::Approx(std::cos(5 * M_PI / 6)));
  CHECK(z.imag() == doctest::Approx(std::sin(5 * M_PI / 6)));
}

TEST_CASE("character groups") {
  const nt::ArithTable t(200);
  CHECK(nt::smallest_primitive_root(7) == 3);
  CHECK(nt::smallest_primitive_root(2) == 1);
  const auto g1 = nt::character_group(t, 1);
  REQUIRE(g1.size() == 1);
  for (std::int64_t n = -3; n < 5; ++n) CHECK(g1[0](n) == CyclotomicElement::integer(1));

  const auto g3 = nt::character_group(t, 3);
  REQUIRE(g3.size() == 2);
  CHECK(g3[0].is_principal());
  CHECK(g3[1](2) == CyclotomicElement::integer(-1));
  CHECK(g3[1](-1) == CyclotomicElement::integer(-1));

  const auto g6 = nt::character_group(t, 6);
  REQUIRE(g6.size() == 2);
  CHECK(g6[1](5) == CyclotomicElement::integer(-1));
  for (const auto& chi : g6) CHECK(chi(4).is_zero());
  CHECK(g6[1].conductor() == 3);
  CHECK(g6[1].primitive_part().modulus() == 3);
  CHECK(g6[1].primitive_part()(2) == CyclotomicElement::integer(-1));
  CHECK(g6[0].primitive_part().modulus() == 1);

  const auto g5 = nt::character_group(t, 5);
  CHECK(g5[0](7) == CyclotomicElement::integer(1));
  for (std::size_t i = 1; i < g5.size(); ++i) {
    CHECK(g5[i].conductor() == 5);
    CHECK(g5[i].primitive_part().modulus() == 5);
  }
  CHECK(nt::character_group(t, 30)[0].conductor() == 1);
  CHECK_THROWS_AS(nt::character_group(t, 12), nt::DomainError);
}

TEST_CASE("characters are multiplicative and orthogonal") {
  const nt::ArithTable t(200);
  for (std::int64_t q : {5, 7, 15, 21, 30, 35}) {
    const auto group = nt::character_group(t, q);
    CHECK(static_cast<std::int64_t>(group.size()) == t.phi(q));
    for (const auto& chi : group) {
      for (std::int64_t a = 1; a < q; ++a) {
        for (std::int64_t b = 1; b < q; ++b) CHECK(chi(a * b) == chi(a) * chi(b));
        CHECK(chi.conjugate()(a) * chi(a) == CyclotomicElement::integer(std::gcd(a, q) == 1 ? 1 : 0));
      }
    }
    // Column orthogonality over characters.
    for (std::int64_t n = 0; n < q; ++n) {
      CyclotomicElement sum;
      for (const auto& chi : group) sum += chi(n);
      CHECK(sum == CyclotomicElement::integer(n == 1 % q ? t.phi(q) : 0));
    }
  }
}

TEST_CASE("toth identity") {
  const nt::ArithTable t(200);
  const auto g6 = nt::character_group(t, 6);
  CHECK(nt::toth_sum(t, g6[1], 1) == CyclotomicElement::integer(-3));
  CHECK(nt::toth_closed(t, g6[1], 1) == CyclotomicElement::integer(-3));
  for (std::int64_t q : {1, 2, 3, 10, 30, 33, 35}) {
    const auto group = nt::character_group(t, q);
    CHECK(nt::toth_sum(t, group[0], 0) ==
          CyclotomicElement::integer(t.mu(q) * nt::ramanujan_sum(t, q, 0)));
    for (const auto& chi : group) {
      for (std::int64_t n = -2; n < q + 2; ++n) CHECK(nt::toth_sum(t, chi, n) == nt::toth_closed(t, chi, n));
    }
  }
  for (std::int64_t p : {5, 7, 11}) {
    const auto group = nt::character_group(t, p);
    for (std::size_t i = 1; i < group.size(); ++i) {
      for (const std::int64_t n : {std::int64_t{0}, p, 2 * p}) {
        CHECK(nt::toth_sum(t, group[i], n) == group[i](-n) * p);
      }
    }
  }
}

TEST_CASE("primitive character sums") {
  const nt::ArithTable t(200);
  CHECK(nt::primitive_sum(t, 1, 5) == 1);
  CHECK(nt::primitive_sum(t, 3, 1) == 1);
  CHECK(nt::primitive_sum(t, 3, 2) == -1);
  for (std::int64_t d = 1; d <= 70; ++d) {
    if (!t.is_squarefree(d)) continue;
    for (std::int64_t a = 1; a <= d; ++a) {
      if (std::gcd(a, d) == 1) CHECK(nt::primitive_sum_direct(t, d, a) == nt::primitive_sum_formula(t, d, a));
    }
  }
  CHECK_THROWS_AS(nt::primitive_sum(t, 6, 2), nt::DomainError);
}

TEST_CASE("upsilon") {
  const nt::ArithTable t(200);
  const auto trivial = nt::character_group(t, 1)[0];
  CHECK(nt::upsilon(t, 1, 7, trivial) == CyclotomicElement::integer(7));
  CHECK(nt::upsilon(t, 2, 4, trivial).is_zero());
  CHECK(nt::upsilon(t, 1, 10, nt::character_group(t, 2)[0]) == CyclotomicElement::integer(5));
}

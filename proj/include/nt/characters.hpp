#pragma once

// Dirichlet characters modulo squarefree q with exact values in Z[ζ_m].
//
// (Z/qZ)^* is the product of the cyclic groups (Z/pZ)^*, p | q. Each
// component is fixed by the smallest primitive root g_p, and a character is
// the exponent vector (a_p) with χ(g_p) = e(a_p / (p-1)) on the p-component.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "nt/arith_sieve.hpp"
#include "nt/cyclotomic.hpp"

namespace nt {

std::int64_t smallest_primitive_root(std::int64_t p);

class DirichletCharacter {
 public:
  struct Component {
    std::int64_t prime;
    std::int64_t generator;
    std::int64_t exponent;  // in [0, p-2]
    std::shared_ptr<const std::vector<std::int64_t>> index;  // discrete log base generator, by residue
  };

  // The trivial character modulo 1.
  DirichletCharacter();
  DirichletCharacter(std::int64_t modulus, std::vector<Component> components);

  std::int64_t modulus() const { return modulus_; }
  // lcm of the component orders; values lie in Z[ζ_order].
  std::uint32_t order() const { return order_; }
  const std::vector<Component>& components() const { return components_; }

  bool is_principal() const;

  // e with χ(n) = ζ_order^e, or nullopt when gcd(n, q) > 1.
  std::optional<std::int64_t> exponent_at(std::int64_t n) const;
  CyclotomicElement operator()(std::int64_t n) const;

  DirichletCharacter conjugate() const;
  // Product of the primes whose component is nontrivial.
  std::int64_t conductor() const;
  // The primitive character modulo the conductor that induces this one.
  DirichletCharacter primitive_part() const;

 private:
  std::int64_t modulus_;
  std::vector<Component> components_;
  std::uint32_t order_;
};

// All φ(q) characters modulo squarefree q, principal first. Throws
// DomainError for non-squarefree q.
std::vector<DirichletCharacter> character_group(const ArithTable& table, std::int64_t q);

// Σ_{k ∈ Z_q^*} χ(k) c_q(k + n), by direct summation.
CyclotomicElement toth_sum(const ArithTable& table, const DirichletCharacter& chi, std::int64_t n);
// d μ(q/d) c_{q/d}(n) χ*(-n) with d the conductor of χ.
CyclotomicElement toth_closed(const ArithTable& table, const DirichletCharacter& chi, std::int64_t n);

// Σ over primitive χ* mod d of χ*(a), enumerating characters.
std::int64_t primitive_sum_direct(const ArithTable& table, std::int64_t d, std::int64_t a);
// Σ_{m | (d, a-1)} φ(m) μ(d/m).
std::int64_t primitive_sum_formula(const ArithTable& table, std::int64_t d, std::int64_t a);
// Both routes; throws NumericError if they disagree and DomainError if
// gcd(a, d) > 1.
std::int64_t primitive_sum(const ArithTable& table, std::int64_t d, std::int64_t a);

// Υ_r(N, χ̄) = Σ_{n ≤ N} χ̄(n) c_r(n).
CyclotomicElement upsilon(const ArithTable& table, std::int64_t r, std::int64_t N, const DirichletCharacter& chi);

}  // namespace nt

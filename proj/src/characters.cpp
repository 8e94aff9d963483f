#include "nt/characters.hpp"

#include <numeric>
#include <string>

#include "nt/errors.hpp"
#include "nt/ramanujan.hpp"

namespace nt {
namespace {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::shared_ptr<const std::vector<std::int64_t>> discrete_log_table(std::int64_t p, std::int64_t g) {
  std::vector<std::int64_t> index(static_cast<std::size_t>(p), -1);
  std::int64_t x = 1;
  for (std::int64_t e = 0; e < p - 1; ++e) {
    index[static_cast<std::size_t>(x)] = e;
    x = x * g % p;
  }
  return std::make_shared<const std::vector<std::int64_t>>(std::move(index));
}

std::int64_t component_order(const DirichletCharacter::Component& c) {
  return (c.prime - 1) / std::gcd(c.exponent, c.prime - 1);
}

// Accumulates integer multiples of roots of unity of a fixed order.
class PowerSum {
 public:
  explicit PowerSum(std::uint32_t order) : order_(order), coeffs_(order, 0) {}
  void add(std::int64_t exponent, std::int64_t weight) {
    coeffs_[static_cast<std::size_t>(mod_floor(exponent, order_))] += weight;
  }
  CyclotomicElement value() const { return CyclotomicElement::from_powers(order_, coeffs_); }

 private:
  std::uint32_t order_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace

std::int64_t smallest_primitive_root(std::int64_t p) {
  if (p < 2) throw std::invalid_argument("primitive root needs a prime");
  if (p == 2) return 1;
  std::vector<std::int64_t> factors;
  std::int64_t m = p - 1;
  for (std::int64_t f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      factors.push_back(f);
      while (m % f == 0) m /= f;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (const std::int64_t f : factors) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw DomainError(std::to_string(p) + " has no primitive root");
}

DirichletCharacter::DirichletCharacter() : modulus_(1), order_(1) {}

DirichletCharacter::DirichletCharacter(std::int64_t modulus, std::vector<Component> components)
    : modulus_(modulus), components_(std::move(components)), order_(1) {
  std::int64_t order = 1;
  for (const auto& c : components_) order = std::lcm(order, component_order(c));
  order_ = static_cast<std::uint32_t>(order);
}

bool DirichletCharacter::is_principal() const {
  for (const auto& c : components_) {
    if (c.exponent != 0) return false;
  }
  return true;
}

std::optional<std::int64_t> DirichletCharacter::exponent_at(std::int64_t n) const {
  std::int64_t e = 0;
  for (const auto& c : components_) {
    const std::int64_t residue = mod_floor(n, c.prime);
    if (residue == 0) return std::nullopt;
    if (c.exponent == 0) continue;
    // e(a ind / (p-1)) = ζ_order^{a ind order / (p-1)}; order is a multiple of
    // (p-1)/gcd(a, p-1) so the product below is exact.
    const std::int64_t g = std::gcd(c.exponent, c.prime - 1);
    const std::int64_t scale = static_cast<std::int64_t>(order_) / ((c.prime - 1) / g);
    e += (c.exponent / g) * (*c.index)[static_cast<std::size_t>(residue)] * scale;
    e %= order_;
  }
  return e;
}

CyclotomicElement DirichletCharacter::operator()(std::int64_t n) const {
  const auto e = exponent_at(n);
  if (!e) return CyclotomicElement(order_);
  return CyclotomicElement::root_of_unity(order_, *e);
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<Component> comps = components_;
  for (auto& c : comps) c.exponent = c.exponent == 0 ? 0 : (c.prime - 1) - c.exponent;
  return DirichletCharacter(modulus_, std::move(comps));
}

std::int64_t DirichletCharacter::conductor() const {
  std::int64_t d = 1;
  for (const auto& c : components_) {
    if (c.exponent != 0) d *= c.prime;
  }
  return d;
}

DirichletCharacter DirichletCharacter::primitive_part() const {
  std::vector<Component> comps;
  for (const auto& c : components_) {
    if (c.exponent != 0) comps.push_back(c);
  }
  return DirichletCharacter(conductor(), std::move(comps));
}

std::vector<DirichletCharacter> character_group(const ArithTable& table, std::int64_t q) {
  table.check(q);
  if (!table.is_squarefree(q)) throw DomainError("character modulus " + std::to_string(q) + " is not squarefree");
  std::vector<DirichletCharacter::Component> base;
  for (const auto& [p, e] : table.factorize(q)) {
    const std::int64_t g = smallest_primitive_root(p);
    base.push_back({p, g, 0, discrete_log_table(p, g)});
  }
  std::vector<DirichletCharacter> group;
  group.reserve(static_cast<std::size_t>(table.phi(q)));
  // Mixed-radix enumeration of exponent vectors, first component fastest.
  while (true) {
    group.emplace_back(q, base);
    std::size_t i = 0;
    for (; i < base.size(); ++i) {
      if (++base[i].exponent < base[i].prime - 1) break;
      base[i].exponent = 0;
    }
    if (i == base.size()) break;
  }
  return group;
}

CyclotomicElement toth_sum(const ArithTable& table, const DirichletCharacter& chi, std::int64_t n) {
  const std::int64_t q = chi.modulus();
  PowerSum sum(chi.order());
  for (std::int64_t k = 1; k <= q; ++k) {
    if (const auto e = chi.exponent_at(k)) sum.add(*e, ramanujan_sum(table, q, k + n));
  }
  return sum.value();
}

CyclotomicElement toth_closed(const ArithTable& table, const DirichletCharacter& chi, std::int64_t n) {
  const std::int64_t q = chi.modulus();
  const std::int64_t d = chi.conductor();
  const std::int64_t factor = d * table.mu(q / d) * ramanujan_sum(table, q / d, n);
  return chi.primitive_part()(-n).lifted(chi.order()) * factor;
}

std::int64_t primitive_sum_direct(const ArithTable& table, std::int64_t d, std::int64_t a) {
  if (gcd(a, d) != 1) throw DomainError("primitive character sum needs gcd(a, d) = 1");
  CyclotomicElement sum;
  for (const auto& chi : character_group(table, d)) {
    if (chi.conductor() == d) sum += chi(a);
  }
  return sum.integer_value();
}

std::int64_t primitive_sum_formula(const ArithTable& table, std::int64_t d, std::int64_t a) {
  table.check(d);
  if (gcd(a, d) != 1) throw DomainError("primitive character sum needs gcd(a, d) = 1");
  std::int64_t sum = 0;
  for (const std::int64_t m : table.divisors(d)) {
    if (mod_floor(a - 1, m) == 0) sum += table.phi(m) * table.mu(d / m);
  }
  return sum;
}

std::int64_t primitive_sum(const ArithTable& table, std::int64_t d, std::int64_t a) {
  const std::int64_t direct = primitive_sum_direct(table, d, a);
  const std::int64_t formula = primitive_sum_formula(table, d, a);
  if (direct != formula) {
    throw NumericError("primitive character sum mismatch for d=" + std::to_string(d) + ", a=" +
                       std::to_string(a) + ": " + std::to_string(direct) + " vs " + std::to_string(formula));
  }
  return direct;
}

CyclotomicElement upsilon(const ArithTable& table, std::int64_t r, std::int64_t N, const DirichletCharacter& chi) {
  table.check(r);
  const DirichletCharacter conj = chi.conjugate();
  PowerSum sum(conj.order());
  for (std::int64_t n = 1; n <= N; ++n) {
    if (const auto e = conj.exponent_at(n)) sum.add(*e, ramanujan_sum(table, r, n));
  }
  return sum.value();
}

}  // namespace nt

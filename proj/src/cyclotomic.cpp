#include "nt/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "nt/errors.hpp"

namespace nt {
namespace {

using Poly = std::vector<std::int64_t>;

// Exact quotient of num by a monic divisor; throws if the remainder is nonzero.
Poly exact_divide(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw NumericError("cyclotomic division underflow");
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw NumericError("cyclotomic division left a remainder");
  }
  return quot;
}

// Reduces p in place modulo the monic polynomial m and trims to deg(m) terms.
void reduce_mod(Poly& p, const Poly& m) {
  const std::size_t deg = m.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    const std::int64_t c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * m[j];
  }
  p.resize(deg, 0);
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<std::uint32_t, Poly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  Poly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (std::uint32_t d = 1; d < m; ++d) {
    if (m % d == 0) p = exact_divide(std::move(p), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(p)).first->second;
}

CyclotomicElement::CyclotomicElement(std::uint32_t order)
    : order_(order), coeffs_(cyclotomic_polynomial(order).size() - 1, 0) {}

CyclotomicElement CyclotomicElement::integer(std::int64_t value, std::uint32_t order) {
  CyclotomicElement e(order);
  e.coeffs_[0] = value;
  return e;
}

CyclotomicElement CyclotomicElement::root_of_unity(std::uint32_t order, std::int64_t exponent) {
  Poly p(order, 0);
  const std::int64_t m = order;
  p[static_cast<std::size_t>(((exponent % m) + m) % m)] = 1;
  return from_powers(order, p);
}

CyclotomicElement CyclotomicElement::from_powers(std::uint32_t order, std::span<const std::int64_t> coeffs) {
  CyclotomicElement e(order);
  Poly p(coeffs.begin(), coeffs.end());
  const Poly& phi = cyclotomic_polynomial(order);
  if (p.size() < phi.size()) p.resize(phi.size(), 0);
  reduce_mod(p, phi);
  e.coeffs_ = std::move(p);
  return e;
}

CyclotomicElement CyclotomicElement::lifted(std::uint32_t multiple) const {
  if (multiple % order_ != 0) {
    throw std::invalid_argument("cannot lift order " + std::to_string(order_) + " to " + std::to_string(multiple));
  }
  if (multiple == order_) return *this;
  const std::uint32_t step = multiple / order_;
  Poly p(static_cast<std::size_t>(coeffs_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  return from_powers(multiple, p);
}

bool CyclotomicElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

bool CyclotomicElement::is_integer() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t CyclotomicElement::integer_value() const {
  if (!is_integer()) throw NumericError("cyclotomic value " + to_string() + " is not a rational integer");
  return coeffs_[0];
}

std::complex<double> CyclotomicElement::to_complex() const {
  std::complex<double> sum{};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
    sum += static_cast<double>(coeffs_[i]) * std::polar(1.0, angle);
  }
  return sum;
}

std::string CyclotomicElement::to_string() const {
  std::string out = "Z[zeta_" + std::to_string(order_) + "](";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(coeffs_[i]);
  }
  return out + ")";
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& other) {
  if (other.order_ != order_) {
    const auto m = std::lcm(order_, other.order_);
    *this = lifted(m);
    return *this += other.lifted(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& other) {
  return *this += other * std::int64_t{-1};
}

CyclotomicElement& CyclotomicElement::operator*=(std::int64_t c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order_ != b.order_) {
    const auto m = std::lcm(a.order_, b.order_);
    return a.lifted(m) * b.lifted(m);
  }
  Poly p(a.coeffs_.size() + b.coeffs_.size(), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CyclotomicElement::from_powers(a.order_, p);
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const auto m = std::lcm(a.order_, b.order_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

}  // namespace nt

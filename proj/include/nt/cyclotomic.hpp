#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nt {

// Integer coefficients of the m-th cyclotomic polynomial, constant term
// first. Computed by exact division of x^m - 1 by Φ_d for d | m, d < m, and
// cached process-wide.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m);

// Element of Z[ζ_m], ζ_m = e(1/m), stored as its canonical remainder modulo
// Φ_m: a vector of φ(m) integer coefficients on 1, ζ, …, ζ^{φ(m)-1}.
class CyclotomicElement {
 public:
  CyclotomicElement() : CyclotomicElement(1) {}
  explicit CyclotomicElement(std::uint32_t order);

  static CyclotomicElement integer(std::int64_t value, std::uint32_t order = 1);
  static CyclotomicElement root_of_unity(std::uint32_t order, std::int64_t exponent);
  // Canonicalizes Σ_i coeffs[i] ζ_m^i for a coefficient vector of any length.
  static CyclotomicElement from_powers(std::uint32_t order, std::span<const std::int64_t> coeffs);

  std::uint32_t order() const { return order_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  // Image under Z[ζ_m] ⊂ Z[ζ_M]; M must be a multiple of order().
  CyclotomicElement lifted(std::uint32_t multiple) const;

  bool is_zero() const;
  bool is_integer() const;
  // Throws NumericError unless is_integer().
  std::int64_t integer_value() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  CyclotomicElement& operator+=(const CyclotomicElement& other);
  CyclotomicElement& operator-=(const CyclotomicElement& other);
  CyclotomicElement& operator*=(std::int64_t c);

  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, std::int64_t c) { return a *= c; }
  friend CyclotomicElement operator*(std::int64_t c, CyclotomicElement a) { return a *= c; }
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);

  // Compares in Z[ζ_lcm] when orders differ.
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

 private:
  std::uint32_t order_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace nt

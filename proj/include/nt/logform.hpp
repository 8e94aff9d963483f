#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nt/rational.hpp"

namespace nt {

class ArithTable;

enum class EvalPrecision { Double, Extended };

// Exact element of the Q-span of {1} ∪ {log p} ∪ {log p · log p'}.
//
// Logarithms of distinct primes are linearly independent over Q and the
// bilinear basis is treated as formally independent, so equality of forms is
// componentwise equality. Terms are kept sorted and no stored coefficient is
// zero, so the representation is canonical.
class LogForm {
 public:
  using PrimePair = std::pair<std::uint32_t, std::uint32_t>;  // first <= second
  using LinearTerm = std::pair<std::uint32_t, Rational>;
  using BilinearTerm = std::pair<PrimePair, Rational>;

  LogForm() = default;
  explicit LogForm(Rational constant);

  static LogForm log_prime(std::uint32_t p, Rational coefficient = 1);

  const Rational& constant() const { return constant_; }
  const std::vector<LinearTerm>& linear() const { return linear_; }
  const std::vector<BilinearTerm>& bilinear() const { return bilinear_; }

  // 0 for rational constants (including zero), else the highest log-degree.
  int degree() const;
  bool is_zero() const { return sgn(constant_) == 0 && linear_.empty() && bilinear_.empty(); }
  std::size_t term_count() const;

  LogForm& operator+=(const LogForm& other);
  LogForm& operator-=(const LogForm& other);
  LogForm& operator*=(const Rational& c);
  LogForm operator-() const;

  friend LogForm operator+(LogForm a, const LogForm& b) { return a += b; }
  friend LogForm operator-(LogForm a, const LogForm& b) { return a -= b; }
  friend LogForm operator*(LogForm a, const Rational& c) { return a *= c; }
  friend LogForm operator*(const Rational& c, LogForm a) { return a *= c; }
  // Throws DegreeError when degree(a) + degree(b) > 2.
  friend LogForm operator*(const LogForm& a, const LogForm& b);

  bool operator==(const LogForm& other) const;

  double eval(EvalPrecision precision = EvalPrecision::Double) const;

  // e.g. "1/2 + 2*log(2) - log(3)*log(5)"; "0" for the zero form.
  std::string to_string() const;

 private:
  Rational constant_;
  std::vector<LinearTerm> linear_;
  std::vector<BilinearTerm> bilinear_;
};

// log n = Σ v_p(n) log p.
LogForm log_form(const ArithTable& table, std::int64_t n);

}  // namespace nt

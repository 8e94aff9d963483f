#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace nt {

using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r{mpz_class{static_cast<long>(num)}, mpz_class{static_cast<long>(den)}};
  r.canonicalize();
  return r;
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// A ratio of machine integers; the common currency of Ramanujan-sum
// expressions, converted to Rational or double at the point of use.
struct IntRatio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational to_rational() const { return make_rational(num, den); }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace nt

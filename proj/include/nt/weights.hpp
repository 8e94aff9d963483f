#pragma once

// Value-type plumbing shared by every Λ-weighted computation.
//
// Each weighted routine is written once as a template over its value type V:
// V = LogForm gives exact results, V = double takes the fast floating path.
// Weights<V> supplies the logarithms and scalars for V; Accumulator<V> sums
// in a fixed order (compensated for double).

#include <cmath>
#include <cstdint>
#include <string>
#include <variant>

#include "nt/arith_sieve.hpp"
#include "nt/logform.hpp"
#include "nt/rational.hpp"

namespace nt {

enum class EvalMode { Exact, Float };

std::string to_string(EvalMode mode);
// Accepts "exact" or "float"; throws std::invalid_argument otherwise.
EvalMode parse_eval_mode(const std::string& name);

// Result of a mode-dispatched computation.
using Weight = std::variant<LogForm, double>;

double weight_value(const Weight& w);

template <class V>
struct Weights;

template <>
struct Weights<double> {
  using Scalar = double;

  static double zero() { return 0.0; }
  static double log_prime(std::int64_t p) { return std::log(static_cast<double>(p)); }
  static double log_of(const ArithTable&, std::int64_t n) { return std::log(static_cast<double>(n)); }
  static double von_mangoldt(const ArithTable& t, std::int64_t n) {
    const std::int64_t p = t.prime_power_base(n);
    return p == 0 ? 0.0 : log_prime(p);
  }
  static double scalar(std::int64_t v) { return static_cast<double>(v); }
  static double scalar(const IntRatio& r) { return r.to_double(); }
  static double ratio(std::int64_t num, std::int64_t den) { return static_cast<double>(num) / static_cast<double>(den); }
};

template <>
struct Weights<LogForm> {
  using Scalar = Rational;

  static LogForm zero() { return LogForm{}; }
  static LogForm log_prime(std::int64_t p) { return LogForm::log_prime(static_cast<std::uint32_t>(p)); }
  static LogForm log_of(const ArithTable& t, std::int64_t n) { return log_form(t, n); }
  static LogForm von_mangoldt(const ArithTable& t, std::int64_t n) {
    const std::int64_t p = t.prime_power_base(n);
    return p == 0 ? LogForm{} : log_prime(p);
  }
  static Rational scalar(std::int64_t v) { return Rational(static_cast<long>(v)); }
  static Rational scalar(const IntRatio& r) { return r.to_rational(); }
  static Rational ratio(std::int64_t num, std::int64_t den) { return make_rational(num, den); }
};

template <class V>
class Accumulator;

// Neumaier-compensated sum; results depend only on the order of add() calls.
template <>
class Accumulator<double> {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

template <>
class Accumulator<LogForm> {
 public:
  void add(const LogForm& x) { sum_ += x; }
  const LogForm& value() const { return sum_; }

 private:
  LogForm sum_;
};

inline double scale(double v, double c) { return v * c; }
inline LogForm scale(const LogForm& v, const Rational& c) { return v * c; }

}  // namespace nt

namespace nt {

// Runs fn.template operator()<V>() with V chosen by mode and wraps the result.
//   dispatch(mode, [&]<class V>() { return delta_direct<V>(table, N, h); });
template <class Fn>
Weight dispatch(EvalMode mode, Fn&& fn) {
  if (mode == EvalMode::Exact) return Weight{fn.template operator()<LogForm>()};
  return Weight{fn.template operator()<double>()};
}

}  // namespace nt

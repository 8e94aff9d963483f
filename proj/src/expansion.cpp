#include "nt/expansion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nt/correlation.hpp"
#include "nt/errors.hpp"
#include "nt/ramanujan.hpp"

namespace nt {
namespace {

void require_range(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("range N must be positive, got " + std::to_string(N));
}

}  // namespace

LogForm von_mangoldt(const ArithTable& table, std::int64_t n) {
  return Weights<LogForm>::von_mangoldt(table, n);
}

template <class V>
V lambda_incomplete(const ArithTable& table, std::int64_t N, std::int64_t n) {
  require_range(N);
  table.check(n);
  using W = Weights<V>;
  Accumulator<V> sum;
  for (const std::int64_t d : table.divisors(n)) {
    if (d > N) break;
    const int mu = table.mu(d);
    if (mu == 0 || d == 1) continue;
    sum.add(scale(W::log_of(table, d), W::scalar(-mu)));
  }
  return sum.value();
}

template <class V>
V wintner_lambda_coeff(const ArithTable& table, std::int64_t N, std::int64_t q, std::int64_t coprime_to) {
  require_range(N);
  table.check(N);
  if (q < 1 || q > N) {
    throw RangeError("Wintner coefficient index " + std::to_string(q) + " outside [1, " + std::to_string(N) + "]");
  }
  using W = Weights<V>;
  const int mu_q = table.mu(q);
  if (mu_q == 0 || gcd(q, coprime_to) != 1) return W::zero();
  const std::int64_t modulus = q * coprime_to;
  Accumulator<V> sum;
  for (std::int64_t d = 1; d <= N / q; ++d) {
    const int mu_d = table.mu(d);
    if (mu_d == 0 || gcd(d, modulus) != 1) continue;
    sum.add(scale(W::log_of(table, d * q), W::ratio(mu_d, d)));
  }
  return scale(sum.value(), W::ratio(-mu_q, q));
}

template <class V>
WintnerCoefficients<V> wintner_lambda_coeffs(const ArithTable& table, std::int64_t N) {
  WintnerCoefficients<V> out;
  out.range = N;
  out.coeffs.assign(static_cast<std::size_t>(N) + 1, Weights<V>::zero());
  for (std::int64_t q = 1; q <= N; ++q) out.coeffs[static_cast<std::size_t>(q)] = wintner_lambda_coeff<V>(table, N, q);
  return out;
}

template <class V>
V finite_expansion_eval(const ArithTable& table, std::int64_t N, std::int64_t n) {
  return finite_expansion_eval(table, wintner_lambda_coeffs<V>(table, N), n);
}

template <class V>
V finite_expansion_eval(const ArithTable& table, const WintnerCoefficients<V>& coeffs, std::int64_t n) {
  table.check(n);
  Accumulator<V> sum;
  for (std::int64_t q = 1; q <= coeffs.range; ++q) {
    if (table.mu(q) == 0) continue;
    sum.add(scale(coeffs[q], Weights<V>::scalar(ramanujan_sum(table, q, n))));
  }
  return sum.value();
}

template <class V>
V finite_expansion_rearranged(const ArithTable& table, std::int64_t N, std::int64_t n) {
  require_range(N);
  table.check(N);
  using W = Weights<V>;
  Accumulator<V> sum;
  for (std::int64_t d = 2; d <= N; ++d) {
    const int mu = table.mu(d);
    if (mu == 0) continue;
    std::int64_t inner = 0;
    for (const std::int64_t q : table.divisors(d)) inner += ramanujan_sum(table, q, n);
    if (inner == 0) continue;
    sum.add(scale(W::log_of(table, d), W::ratio(-mu * inner, d)));
  }
  return sum.value();
}

template <class T>
T dirichlet_mobius(const ArithTable& table, std::span<const T> f, std::int64_t m) {
  if (m < 1 || static_cast<std::size_t>(m) > f.size()) {
    throw RangeError("sequence does not cover index " + std::to_string(m));
  }
  T sum{};
  for (const std::int64_t d : table.divisors(m)) {
    const int mu = table.mu(d);
    if (mu == 0) continue;
    const T& value = f[static_cast<std::size_t>(m / d - 1)];
    if (mu > 0) {
      sum += value;
    } else {
      sum -= value;
    }
  }
  return sum;
}

template <class T>
T wintner_coeff_truncated(const ArithTable& table, std::span<const T> f, std::int64_t q, std::int64_t M) {
  if (q < 1 || M < 0) throw std::invalid_argument("wintner_coeff_truncated needs q >= 1, M >= 0");
  if (static_cast<std::size_t>(M * q) > f.size()) {
    throw RangeError("sequence of length " + std::to_string(f.size()) + " does not cover [1, " +
                     std::to_string(M * q) + "]");
  }
  using Scalar = std::conditional_t<std::is_same_v<T, double>, double, Rational>;
  T sum{};
  for (std::int64_t n = 1; n <= M; ++n) {
    T term = dirichlet_mobius<T>(table, f, n * q);
    if constexpr (std::is_same_v<T, double>) {
      sum += term / static_cast<double>(n * q);
    } else {
      sum += term * Scalar(make_rational(1, n * q));
    }
  }
  return sum;
}

double wintner_partial_sum(const ArithTable& table, std::span<const double> f, std::int64_t M) {
  if (static_cast<std::size_t>(M) > f.size()) {
    throw RangeError("sequence does not cover [1, " + std::to_string(M) + "]");
  }
  Accumulator<double> sum;
  for (std::int64_t n = 1; n <= M; ++n) {
    sum.add(std::fabs(dirichlet_mobius<double>(table, f, n)) / static_cast<double>(n));
  }
  return sum.value();
}

std::vector<double> delange_partial_sums(const ArithTable& table, std::int64_t N, std::int64_t M) {
  require_range(N);
  if (M < 1) throw std::invalid_argument("Delange partial sum needs M >= 1");
  table.check(N + M);
  std::vector<double> corr(static_cast<std::size_t>(M));
  for (std::int64_t h = 1; h <= M; ++h) corr[static_cast<std::size_t>(h - 1)] = corr_lambda_lambdaN<double>(table, N, h);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(M));
  Accumulator<double> sum;
  for (std::int64_t m = 1; m <= M; ++m) {
    const double mobius = dirichlet_mobius<double>(table, corr, m);
    sum.add(std::ldexp(std::fabs(mobius), table.omega(m)) / static_cast<double>(m));
    out.push_back(sum.value());
  }
  return out;
}

double delange_partial_sum(const ArithTable& table, std::int64_t N, std::int64_t M) {
  return delange_partial_sums(table, N, M).back();
}

template double lambda_incomplete<double>(const ArithTable&, std::int64_t, std::int64_t);
template LogForm lambda_incomplete<LogForm>(const ArithTable&, std::int64_t, std::int64_t);
template double wintner_lambda_coeff<double>(const ArithTable&, std::int64_t, std::int64_t, std::int64_t);
template LogForm wintner_lambda_coeff<LogForm>(const ArithTable&, std::int64_t, std::int64_t, std::int64_t);
template WintnerCoefficients<double> wintner_lambda_coeffs<double>(const ArithTable&, std::int64_t);
template WintnerCoefficients<LogForm> wintner_lambda_coeffs<LogForm>(const ArithTable&, std::int64_t);
template double finite_expansion_eval<double>(const ArithTable&, std::int64_t, std::int64_t);
template LogForm finite_expansion_eval<LogForm>(const ArithTable&, std::int64_t, std::int64_t);
template double finite_expansion_eval<double>(const ArithTable&, const WintnerCoefficients<double>&, std::int64_t);
template LogForm finite_expansion_eval<LogForm>(const ArithTable&, const WintnerCoefficients<LogForm>&, std::int64_t);
template double finite_expansion_rearranged<double>(const ArithTable&, std::int64_t, std::int64_t);
template LogForm finite_expansion_rearranged<LogForm>(const ArithTable&, std::int64_t, std::int64_t);
template double dirichlet_mobius<double>(const ArithTable&, std::span<const double>, std::int64_t);
template LogForm dirichlet_mobius<LogForm>(const ArithTable&, std::span<const LogForm>, std::int64_t);
template double wintner_coeff_truncated<double>(const ArithTable&, std::span<const double>, std::int64_t, std::int64_t);
template LogForm wintner_coeff_truncated<LogForm>(const ArithTable&, std::span<const LogForm>, std::int64_t, std::int64_t);

}  // namespace nt

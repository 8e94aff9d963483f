#pragma once

// The incomplete von Mangoldt function Λ_N, its Wintner coefficients and
// finite Ramanujan expansion, and partial sums of the Wintner and Delange
// series.
//
// Templates are instantiated for V = LogForm (exact) and V = double.

#include <cstdint>
#include <span>
#include <vector>

#include "nt/arith_sieve.hpp"
#include "nt/logform.hpp"
#include "nt/weights.hpp"

namespace nt {

// Λ(n) as a log-form: log p when n = p^a, else zero.
LogForm von_mangoldt(const ArithTable& table, std::int64_t n);

// Λ_N(n) = -Σ_{d | n, d ≤ N} μ(d) log d.
template <class V>
V lambda_incomplete(const ArithTable& table, std::int64_t N, std::int64_t n);

// Wintner coefficient of Λ_N restricted to divisors coprime to `coprime_to`:
//   -(μ(q)/q) Σ_{d ≤ N/q, (d, q·coprime_to) = 1} μ(d) log(dq) / d
//     = -Σ_{e ≤ N, q | e, (e, coprime_to) = 1} μ(e) log e / e.
// coprime_to = 1 gives the plain coefficient \hat{Λ_N}(q); zero unless q is
// squarefree and coprime to coprime_to.
template <class V>
V wintner_lambda_coeff(const ArithTable& table, std::int64_t N, std::int64_t q, std::int64_t coprime_to = 1);

template <class V>
struct WintnerCoefficients {
  std::int64_t range = 0;
  std::vector<V> coeffs;  // coeffs[q] for 1 <= q <= range; coeffs[0] unused

  const V& operator[](std::int64_t q) const { return coeffs[static_cast<std::size_t>(q)]; }
};

template <class V>
WintnerCoefficients<V> wintner_lambda_coeffs(const ArithTable& table, std::int64_t N);

// Σ_{q ≤ N} \hat{Λ_N}(q) c_q(n).
template <class V>
V finite_expansion_eval(const ArithTable& table, std::int64_t N, std::int64_t n);
template <class V>
V finite_expansion_eval(const ArithTable& table, const WintnerCoefficients<V>& coeffs, std::int64_t n);

// -Σ_{d ≤ N} (μ(d) log d / d) Σ_{q | d} c_q(n): the same sum before the
// divisor exchange; used as a cross-check.
template <class V>
V finite_expansion_rearranged(const ArithTable& table, std::int64_t N, std::int64_t n);

// (μ * f)(m) = Σ_{d | m} μ(d) f(m/d), with f(n) stored at f[n-1].
template <class T>
T dirichlet_mobius(const ArithTable& table, std::span<const T> f, std::int64_t m);

// (1/q) Σ_{n ≤ M} (μ * f)(nq) / n. Needs f on [1, M q].
template <class T>
T wintner_coeff_truncated(const ArithTable& table, std::span<const T> f, std::int64_t q, std::int64_t M);

// Σ_{n ≤ M} |(μ * f)(n)| / n.
double wintner_partial_sum(const ArithTable& table, std::span<const double> f, std::int64_t M);

// Partial sums of Σ_m (2^{ω(m)} / m) |Σ_{d | m} μ(d) C_{Λ,Λ_N}(N, m/d)| for
// m = 1..M; element i holds the sum up to m = i + 1. Needs N + M ≤ limit.
std::vector<double> delange_partial_sums(const ArithTable& table, std::int64_t N, std::int64_t M);
double delange_partial_sum(const ArithTable& table, std::int64_t N, std::int64_t M);

}  // namespace nt

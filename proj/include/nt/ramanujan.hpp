#pragma once

// Ramanujan sums c_q(n) and the identities built on them: Cohen's mean,
// Brauer–Rademacher, and the progression-restricted sums
//   S_N(q, k; r) = Σ_{n ≤ N, n ≡ k (mod q)} c_r(n).

#include <cstdint>

#include "nt/arith_sieve.hpp"
#include "nt/rational.hpp"

namespace nt {

// c_q(n) = φ(q) μ(q/g) / φ(q/g), g = gcd(n mod q, q). Any integer n; q ≤ limit.
std::int64_t ramanujan_sum(const ArithTable& table, std::int64_t q, std::int64_t n);

// Σ_{j ≤ q, (j,q)=1} e(jn/q) in floating point, rounded. Independent of the
// sieve; throws NumericError if the imaginary part or the rounding residual
// exceeds 1e-6.
std::int64_t ramanujan_sum_bruteforce(std::int64_t q, std::int64_t n);

// (1/φ(q)) Σ_{k ∈ Z_q^*} c_q(k + h).
Rational cohen_mean(const ArithTable& table, std::int64_t q, std::int64_t h);
// μ(q) c_q(h) / φ(q).
Rational cohen_mean_closed(const ArithTable& table, std::int64_t q, std::int64_t h);

// Σ_{t | q/d, (t,n)=1} t μ(q/(td)) / φ(td) for squarefree q and d | q.
// Throws DomainError for non-squarefree q or d not dividing q.
Rational brauer_rademacher(const ArithTable& table, std::int64_t q, std::int64_t d, std::int64_t n);
// The same sum regrouped as (1/φ(d)) Σ_{t | q/d, (t,n)=1} t μ(q/(td)) / φ(t).
Rational brauer_rademacher_split(const ArithTable& table, std::int64_t q, std::int64_t d, std::int64_t n);
// μ(q/d) c_{q/d}(n) / φ(q).
Rational brauer_rademacher_closed(const ArithTable& table, std::int64_t q, std::int64_t d, std::int64_t n);

// Direct summation of S_N(q, k; r). N ≥ 0 (S_0 = 0), q, r ≥ 1.
std::int64_t s_sum(const ArithTable& table, std::int64_t N, std::int64_t q, std::int64_t k, std::int64_t r);

// #{1 ≤ n ≤ N : n ≡ k (mod q)}.
std::int64_t progression_count(std::int64_t N, std::int64_t q, std::int64_t k);

// Closed forms for S_N(q, k; r):
//   r | q         : c_r(k) · #{n ≤ N : n ≡ k (q)}
//   gcd(q, r) = 1 : Σ_{t=1}^{r} c_r(t) (⌊N/(qr)⌋ + ν_N(t, k))
// where ν_N(t, k) = 1 iff the CRT lift n(k, t) ∈ [1, qr] is ≤ N mod qr.
// The divisor branch is taken when both apply. Throws DomainError otherwise.
std::int64_t s_sum_closed(const ArithTable& table, std::int64_t N, std::int64_t q, std::int64_t k,
                          std::int64_t r);

// ν_N(t, k) for coprime q, r.
int s_sum_nu(std::int64_t N, std::int64_t q, std::int64_t r, std::int64_t k, std::int64_t t);

// The unique n ∈ [1, qr] with n ≡ k (mod q) and n ≡ t (mod r), built as
// k r' r + t q' q with r r' ≡ 1 (mod q), q q' ≡ 1 (mod r).
// Throws DomainError unless gcd(q, r) = 1.
std::int64_t crt_solution(std::int64_t k, std::int64_t t, std::int64_t q, std::int64_t r);

// Inverse of a modulo m in [0, m); m = 1 gives 0. Throws DomainError if
// gcd(a, m) > 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

}  // namespace nt

#pragma once

// Λ-weighted progressions, correlations and the deviation
//
//   Δ(N, h) = Σ_{q ≤ N} \hat{Λ_N}(q) Σ_{k ∈ Z_q^*} ψ(N; q, k) δ(h; q, k),
//   δ(h; q, k) = c_q(k + h) - μ(q) c_q(h) / φ(q),
//
// computed by four independent routes:
//   delta_direct  : the definition;
//   delta_via_corr: C_{Λ,Λ_N}(N, h) - expansion_rhs - remainder_r;
//   delta_form1   : prime-free double sum over coprime moduli (q, r) of the
//                    progression sums S_N(q, k; r);
//   delta_form2   : the same regrouped by t = (q, h) through character sums.
//
// Templates are instantiated for V = LogForm (exact) and V = double.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nt/arith_sieve.hpp"
#include "nt/expansion.hpp"
#include "nt/logform.hpp"
#include "nt/rational.hpp"
#include "nt/weights.hpp"

namespace nt {

// ψ(N; q, k) = Σ_{n ≤ N, n ≡ k (q)} Λ(n).
template <class V>
V psi_apc(const ArithTable& table, std::int64_t N, std::int64_t q, std::int64_t k);

// δ(h; q, k).
Rational deviation(const ArithTable& table, std::int64_t h, std::int64_t q, std::int64_t k);
IntRatio deviation_ratio(const ArithTable& table, std::int64_t h, std::int64_t q, std::int64_t k);

// C_{Λ,Λ_N}(N, h) = Σ_{m ≤ N} Λ(m) Λ_N(m + h); h ≥ 0, N + h ≤ limit.
template <class V>
V corr_lambda_lambdaN(const ArithTable& table, std::int64_t N, std::int64_t h);

// C_{Λ,Λ}(N, h) = Σ_{n ≤ N} Λ(n) Λ(n + h).
template <class V>
V corr_lambda_lambda(const ArithTable& table, std::int64_t N, std::int64_t h);

// Σ_{N < d ≤ N+h} μ(d) log d Σ_{n ≤ N, n ≡ -h (d)} Λ(n), so that
// C_{Λ,Λ} = C_{Λ,Λ_N} - corr_tail exactly.
template <class V>
V corr_tail(const ArithTable& table, std::int64_t N, std::int64_t h);

// Contribution of the single modulus q to Δ(N, h).
template <class V>
V delta_modulus_term(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q);

template <class V>
V delta_direct(const ArithTable& table, std::int64_t N, std::int64_t h, unsigned threads = 1);

// Δ with ψ(N; q, k) replaced by ψ(N; q, k) - (1/φ(q)) Σ_{n ≤ N, (n,q)=1} Λ(n).
// Equal to delta_direct because Σ_k δ(h; q, k) = 0.
template <class V>
V delta_direct_centered(const ArithTable& table, std::int64_t N, std::int64_t h);

// Σ_{n ≤ N} Λ(n) c_q(n). For squarefree q this uses
//   μ(q) ψ(N) + Σ_{p | q, p ≤ N} ⌊log_p N⌋ μ(q/p) p log p.
template <class V>
V lambda_ramanujan_moment(const ArithTable& table, std::int64_t N, std::int64_t q);
template <class V>
V lambda_ramanujan_moment_direct(const ArithTable& table, std::int64_t N, std::int64_t q);

// Σ_{q ≤ N} (\hat{Λ_N}(q) / φ(q)) c_q(h) Σ_{n ≤ N} Λ(n) c_q(n).
template <class V>
V expansion_rhs(const ArithTable& table, std::int64_t N, std::int64_t h);
// The same double sum evaluated term by term.
template <class V>
V expansion_rhs_direct(const ArithTable& table, std::int64_t N, std::int64_t h);

enum class RemainderModuli { Squarefree, SquarefreeComposite };

// R(N, h) = Σ_{n, q ≤ N, (n,q) > 1} Λ(n) \hat{Λ_N}(q) (c_q(n+h) - c_q(n) c_q(h) / φ(q)).
// SquarefreeComposite drops prime q, whose contributions vanish identically.
template <class V>
V remainder_r(const ArithTable& table, std::int64_t N, std::int64_t h,
              RemainderModuli moduli = RemainderModuli::Squarefree);

template <class V>
V delta_via_corr(const ArithTable& table, std::int64_t N, std::int64_t h);

// D_N(h; q, r) = Σ_{n ≤ N, (n,q)=1} c_r(n) δ(h; q, n). Throws DomainError
// unless gcd(q, r) = 1.
Rational d_n_sum(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q, std::int64_t r);
IntRatio d_n_sum_ratio(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q, std::int64_t r);
// D_N(h; q, r) = Σ_{k ∈ Z_q^*} S_N(q, k; r) δ(h; q, k).
Rational d_n_sum_progressions(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q,
                              std::int64_t r);

// Σ_{3 ≤ q ≤ N} \hat{Λ_N}(q) Σ_{r ≤ N, (r,q)=1} \hat{Λ_N}^{(q)}(r) D_N(h; q, r),
// where \hat{Λ_N}^{(q)}(r) is the Wintner coefficient restricted to divisors
// coprime to q (wintner_lambda_coeff with coprime_to = q). On (n, q) = 1,
// n ≤ N these coefficients expand Λ(n) = Σ_r \hat{Λ_N}^{(q)}(r) c_r(n).
template <class V>
V delta_form1(const ArithTable& table, std::int64_t N, std::int64_t h, unsigned threads = 1);

// T_{N,h}(m; q, r) = Σ_{n ≤ N, (n,q)=1, m | n+h} c_r(n). Needs squarefree q,
// m | q, gcd(r, q) = 1; throws DomainError otherwise.
std::int64_t t_sum(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t m, std::int64_t q,
                   std::int64_t r);

// Φ_{N,h}(q, r) = Σ_{χ ≠ χ_0 mod q} Υ_r(N, χ̄) χ*(-h) d_χ, three ways:
//   characters: exact cyclotomic sum over the character group;
//   divisors  : Σ_{n ≤ N, (n,q)=1} c_r(n) Σ_{1 < d | q, (d,h)=1} d Σ_{m | (d, n+h)} φ(m) μ(d/m);
//   phi_sum   : folded into T-sums:
//                Σ_{m | q, (m,h)=1} m φ(m) ∏_{p | q/m, p ∤ h} (1 - p) · T(m) - T(1).
std::int64_t phi_sum_characters(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q,
                                std::int64_t r);
std::int64_t phi_sum_divisors(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q,
                              std::int64_t r);
std::int64_t phi_sum(const ArithTable& table, std::int64_t N, std::int64_t h, std::int64_t q, std::int64_t r);

// Σ_{t | h} μ(t) φ(t) Σ_{3 ≤ q ≤ N, (q,h)=t} (\hat{Λ_N}(q) / φ(q))
//   Σ_{r ≤ N, (r,q)=1} \hat{Λ_N}^{(q)}(r) Φ_{N,h}(q, r).   Requires h ≥ 1.
template <class V>
V delta_form2(const ArithTable& table, std::int64_t N, std::int64_t h, unsigned threads = 1);

// Σ_{q ≤ Q} μ²(q) c_q(h) / φ(q)².
double singular_series_truncated(const ArithTable& table, std::int64_t h, std::int64_t Q);
// 2 ∏_{2 < p ≤ bound} (1 - (p-1)^{-2}) ∏_{p | k, p > 2} (p-1)/(p-2): the
// Euler product of the series at h = 2k. Builds its own prime sieve.
double singular_series_euler(std::int64_t k, std::int64_t prime_bound);

struct DeltaReport {
  std::int64_t N = 0;
  std::int64_t h = 0;
  EvalMode mode = EvalMode::Float;
  double delta_direct = 0;
  double delta_via_corr = 0;
  double delta_form1 = 0;
  std::optional<double> delta_form2;  // route needs h ≥ 1
  double remainder_r = 0;
  double corr = 0;
  double expansion_rhs = 0;
  double max_pairwise_discrepancy = 0;
  std::optional<std::string> delta_exact;  // symbolic Δ in exact mode
  double elapsed_seconds = 0;
};

// Runs all Δ routes. In exact mode the discrepancy is the evaluated exact
// difference of the forms, so it is 0 exactly when the routes agree.
DeltaReport delta_report(const ArithTable& table, std::int64_t N, std::int64_t h, EvalMode mode,
                         unsigned threads = 1);

struct HLReport {
  std::int64_t N = 0;
  std::int64_t k = 0;
  std::int64_t Q = 0;
  std::int64_t prime_bound = 0;
  double corr_over_N = 0;         // C_{Λ,Λ}(N, 2k) / N
  double expansion_over_N = 0;    // expansion_rhs(N, 2k) / N
  double singular_truncated = 0;  // Σ_{q ≤ Q} μ²(q) c_q(2k) / φ(q)²
  double singular_euler = 0;
  double tail_correction = 0;     // corr_tail(N, 2k) / N
  double elapsed_seconds = 0;
};

// Needs N + 2k ≤ limit and Q ≤ limit.
HLReport hl_experiment(const ArithTable& table, std::int64_t N, std::int64_t k, std::int64_t Q,
                       std::int64_t prime_bound);

// (N, Δ(N, h) / N) for each N in the grid, via delta_direct.
std::vector<std::pair<std::int64_t, double>> delta_trend(const ArithTable& table, std::span<const std::int64_t> grid,
                                                          std::int64_t h, EvalMode mode, unsigned threads = 1);

}  // namespace nt

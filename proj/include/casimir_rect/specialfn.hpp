#pragma once

#include <cstdint>

namespace casimir_rect {

/// Truncation control for the q-series in q = exp(-2 pi rho).
struct QSeriesContext {
    double q;
    int n_terms;  ///< terms actually summed

    static QSeriesContext for_rho(double rho);
    /// Bound on the neglected tail of sum sigma(n) q^n.
    double tail_bound() const;
};

/// Real dilogarithm Li2(z) for z <= 1.
double dilog(double z);

double euler_beta(double a, double b);

/// Sum of the divisors of n, from a lazily built sieve for small n.
std::int64_t divisor_sigma(int n);

/// E2(i rho) = 1 - 24 sum sigma(n) q^n.
double eisenstein_E2(double rho);

/// log (q; q)_inf = sum_j log(1 - q^j).
double log_q_pochhammer(double rho);
/// The same quantity as -sum sigma(n) q^n / n.
double log_q_pochhammer_divisor(double rho);

/// log eta(i rho) = -pi rho / 12 + log (q; q)_inf.
double log_dedekind_eta(double rho);

double catalan_constant();

/// d/ds zeta(s, a) at s = -1 for 0 < a <= 1, by Euler-Maclaurin with
/// `direct_terms` explicit terms and `bernoulli_terms` correction terms.
double hurwitz_zeta_sderiv_neg1(double a, int direct_terms = 30, int bernoulli_terms = 8);

}  // namespace casimir_rect

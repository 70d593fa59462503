#include "casimir_rect/specialfn.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <vector>

#include "casimir_rect/errors.hpp"

namespace casimir_rect {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kQSeriesCap = 5000;
constexpr double kQSeriesCut = 1e-18;

double dilog_series(double z)
{
    double power = z;
    double sum = z;
    for (int k = 2; k < 200; ++k) {
        power *= z;
        const double term = power / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

constexpr int kSieveLimit = 100000;

const std::vector<std::int64_t>& divisor_sieve()
{
    static std::vector<std::int64_t> table;
    static std::once_flag once;
    std::call_once(once, [] {
        table.assign(kSieveLimit + 1, 0);
        for (int d = 1; d <= kSieveLimit; ++d) {
            for (int m = d; m <= kSieveLimit; m += d) table[m] += d;
        }
    });
    return table;
}

double q_of(double rho)
{
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("q-series: rho must be positive and finite");
    return std::exp(-2.0 * kPi * rho);
}

// sum_{n>=1} c(n) q^n, stopped when q^n n^2 drops below the cut.
template <typename Coef>
double q_sum(double q, Coef&& coef)
{
    double sum = 0.0;
    double power = 1.0;
    for (int n = 1; n <= kQSeriesCap; ++n) {
        power *= q;
        if (power == 0.0) break;
        sum += coef(n) * power;
        if (power * n * static_cast<double>(n) < kQSeriesCut) break;
    }
    return sum;
}

}  // namespace

QSeriesContext QSeriesContext::for_rho(double rho)
{
    const double q = q_of(rho);
    int n = 0;
    double power = 1.0;
    while (n < kQSeriesCap) {
        ++n;
        power *= q;
        if (power == 0.0 || power * n * static_cast<double>(n) < kQSeriesCut) break;
    }
    return {q, n};
}

double QSeriesContext::tail_bound() const
{
    // sigma(n) <= n^2, and sum_{n>N} n^2 q^n <= (N+1)^2 q^(N+1) / (1-q)^3
    const double m = n_terms + 1.0;
    return m * m * std::pow(q, m) / std::pow(1.0 - q, 3);
}

double dilog(double z)
{
    if (!(z <= 1.0)) throw DomainError("dilog: requires z <= 1");
    if (z == 1.0) return kPi * kPi / 6.0;
    if (z == 0.0) return 0.0;
    if (z < -1.0) {
        const double l = std::log(-z);
        return -kPi * kPi / 6.0 - 0.5 * l * l - dilog(1.0 / z);
    }
    if (z < -0.5) {
        const double l = std::log1p(-z);
        return -dilog_series(z / (z - 1.0)) - 0.5 * l * l;
    }
    if (z <= 0.5) return dilog_series(z);
    return kPi * kPi / 6.0 - std::log(z) * std::log1p(-z) - dilog_series(1.0 - z);
}

double euler_beta(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("euler_beta: arguments must be positive");
    if (a + b < 150.0) return std::tgamma(a) * std::tgamma(b) / std::tgamma(a + b);
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

std::int64_t divisor_sigma(int n)
{
    if (n < 1) throw DomainError("divisor_sigma: n must be >= 1");
    if (n <= kSieveLimit) return divisor_sieve()[static_cast<std::size_t>(n)];
    std::int64_t sum = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += d;
        if (d * d != n) sum += n / d;
    }
    return sum;
}

double eisenstein_E2(double rho)
{
    const double q = q_of(rho);
    return 1.0 - 24.0 * q_sum(q, [](int n) { return static_cast<double>(divisor_sigma(n)); });
}

double log_q_pochhammer(double rho)
{
    const double q = q_of(rho);
    double sum = 0.0;
    double power = 1.0;
    for (int j = 1; j <= kQSeriesCap; ++j) {
        power *= q;
        if (power < 1e-300) break;
        sum += std::log1p(-power);
        if (power < kQSeriesCut * 1e-2) break;
    }
    return sum;
}

double log_q_pochhammer_divisor(double rho)
{
    const double q = q_of(rho);
    return -q_sum(q, [](int n) { return static_cast<double>(divisor_sigma(n)) / n; });
}

double log_dedekind_eta(double rho) { return -kPi * rho / 12.0 + log_q_pochhammer(rho); }

double catalan_constant()
{
    // C = (pi/8) log(2 + sqrt 3) + (3/8) sum_k 1 / ((2k+1)^2 binom(2k, k))
    double sum = 0.0;
    double inv_binom = 1.0;
    for (int k = 0; k < 60; ++k) {
        if (k > 0) inv_binom *= static_cast<double>(k) / (2.0 * (2.0 * k - 1.0));
        const double odd = 2.0 * k + 1.0;
        const double term = inv_binom / (odd * odd);
        sum += term;
        if (term < 1e-19) break;
    }
    return kPi / 8.0 * std::log(2.0 + std::sqrt(3.0)) + 0.375 * sum;
}

double hurwitz_zeta_sderiv_neg1(double a, int direct_terms, int bernoulli_terms)
{
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta_sderiv_neg1: requires 0 < a <= 1");
    static constexpr long double kB2j[] = {
        1.0L / 6.0L,      -1.0L / 30.0L,  1.0L / 42.0L,         -1.0L / 30.0L,     5.0L / 66.0L,
        -691.0L / 2730.0L, 7.0L / 6.0L,   -3617.0L / 510.0L,    43867.0L / 798.0L, -174611.0L / 330.0L};
    constexpr int kMaxBernoulli = 10;
    if (direct_terms < 1) throw DomainError("hurwitz_zeta_sderiv_neg1: direct_terms must be >= 1");
    if (bernoulli_terms < 1 || bernoulli_terms > kMaxBernoulli) {
        throw DomainError("hurwitz_zeta_sderiv_neg1: bernoulli_terms must be in [1, 10]");
    }

    long double sum = 0.0L;
    for (int k = 0; k < direct_terms; ++k) {
        const long double n = k + static_cast<long double>(a);
        sum -= n * std::log(n);
    }
    const long double big_n = direct_terms + static_cast<long double>(a);
    const long double log_n = std::log(big_n);
    sum += big_n * big_n * (2.0L * log_n - 1.0L) / 4.0L;
    sum -= 0.5L * big_n * log_n;
    sum += (1.0L + log_n) / 12.0L;  // j = 1
    long double last = 0.0L;
    for (int j = 2; j <= bernoulli_terms; ++j) {
        const long double two_j = 2.0L * j;
        last = -kB2j[j - 1] / (two_j * (two_j - 1.0L) * (two_j - 2.0L)) * std::pow(big_n, 2.0L - two_j);
        sum += last;
    }
    if (std::abs(static_cast<double>(last)) > 1e-12) {
        std::ostringstream msg;
        msg << "hurwitz_zeta_sderiv_neg1: Euler-Maclaurin tail not converged (last term " << static_cast<double>(last)
            << ")";
        throw NumericalError(msg.str());
    }
    return static_cast<double>(sum);
}

}  // namespace casimir_rect

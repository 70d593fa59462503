#include "casimir_rect/casimir.hpp"

#include <atomic>
#include <bit>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "casimir_rect/errors.hpp"
#include "casimir_rect/parallel.hpp"
#include "casimir_rect/sigma.hpp"
#include "casimir_rect/specialfn.hpp"
#include "casimir_rect/strip.hpp"

namespace casimir_rect {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

// I2 grid: edges 2^-20 .. 1 then unit steps; psi(xi, 1) is negligible beyond
// these cutoffs (it decays like exp(-2 xi) above and exp(-|xi|) below).
constexpr int kSmallEdges = 20;
constexpr double kCutoffHigh = 40.0;
constexpr double kCutoffLow = 50.0;

QuadratureSpec i2_spec()
{
    QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    spec.abs_tol = 1e-15;
    spec.max_depth = 40;
    return spec;
}

std::vector<double> grid_edges(double cutoff)
{
    std::vector<double> edges;
    for (int k = kSmallEdges; k >= 1; --k) edges.push_back(std::ldexp(1.0, -k));
    for (int k = 1; k <= static_cast<int>(cutoff); ++k) edges.push_back(k);
    return edges;
}

struct PsiMemo {
    std::shared_mutex mutex;
    std::unordered_map<std::uint64_t, double> values;
    std::map<std::pair<int, int>, double> panels;  // (N, signed panel index)
    std::atomic<std::size_t> hits{0};
    std::atomic<std::size_t> misses{0};
};

PsiMemo& psi_memo(int N)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<PsiMemo>> memos;
    std::lock_guard lock(mutex);
    auto& slot = memos[N];
    if (!slot) slot = std::make_unique<PsiMemo>();
    return *slot;
}

std::vector<PsiMemo*> all_memos()
{
    std::vector<PsiMemo*> out;
    for (int N = 1; N <= 16; ++N) out.push_back(&psi_memo(N));
    return out;
}

double psi_rho1(double xi, int N)
{
    PsiMemo& memo = psi_memo(N);
    const std::uint64_t key = std::bit_cast<std::uint64_t>(xi);
    {
        std::shared_lock lock(memo.mutex);
        auto it = memo.values.find(key);
        if (it != memo.values.end()) {
            ++memo.hits;
            return it->second;
        }
    }
    ++memo.misses;
    const double value = psi_strip(xi, 1.0, N);
    std::unique_lock lock(memo.mutex);
    memo.values.emplace(key, value);
    return value;
}

// [psi(xi,1) - psi0/(1+xi^2)] / xi
double i2_integrand(double xi, double psi0, int N)
{
    return (psi_rho1(xi, N) - psi0 / (1.0 + xi * xi)) / xi;
}

// Integral of the I2 integrand over grid panel `index` on side `sign`
// (panel i spans edges[i]..edges[i+1] times sign).
double grid_panel(int sign, std::size_t index, int N, double psi0)
{
    PsiMemo& memo = psi_memo(N);
    const int key = sign * static_cast<int>(index + 1);
    {
        std::shared_lock lock(memo.mutex);
        auto it = memo.panels.find({N, key});
        if (it != memo.panels.end()) return it->second;
    }
    const auto edges = grid_edges(sign > 0 ? kCutoffHigh : kCutoffLow);
    const double a = edges.at(index);
    const double b = edges.at(index + 1);
    auto f = [psi0, N](double xi) { return i2_integrand(xi, psi0, N); };
    const double value = sign > 0 ? integrate_finite(f, a, b, i2_spec()) : integrate_finite(f, -b, -a, i2_spec());
    std::unique_lock lock(memo.mutex);
    memo.panels.emplace(std::pair{N, key}, value);
    return value;
}

double dilog_minus_exp(double log_z)
{
    // Li2(-e^l), inverted for large l
    if (log_z <= 0.0) return dilog(-std::exp(log_z));
    return -kPi * kPi / 6.0 - 0.5 * log_z * log_z - dilog(-std::exp(-log_z));
}

}  // namespace

double integral_I1(double x_vol, const QuadratureSpec& spec_in)
{
    if (x_vol == 0.0 || !std::isfinite(x_vol)) throw DomainError("integral_I1: x must be finite and non-zero");
    QuadratureSpec spec = spec_in;
    spec.rel_tol = std::min(spec.rel_tol, 1e-13);
    spec.max_depth = std::max(spec.max_depth, 60);
    const double x = x_vol;
    auto f = [x](double s) { return dilog_minus_exp(strip_log_q(s, x)) / std::hypot(x, s); };
    SinhMapOptions options;
    options.soften_origin = x < 0.0;
    return -integrate_sinh_mapped(f, strip_feature_width(x), spec, options) / (2.0 * kPi);
}

double integral_I2(double x_vol, int N)
{
    if (x_vol == 0.0 || !std::isfinite(x_vol)) throw DomainError("integral_I2: x must be finite and non-zero");
    if (N < 1 || N > 16) throw DomainError("integral_I2: N must be in [1, 16]");
    const double psi0 = psi_strip(0.0, 1.0, N);
    const int sign = x_vol > 0.0 ? 1 : -1;
    const double ax = std::abs(x_vol);
    const double cutoff = sign > 0 ? kCutoffHigh : kCutoffLow;
    const double log_term = psi0 * std::log1p(1.0 / (x_vol * x_vol));
    const double shift = sign > 0 ? 0.0 : -kLn2;

    if (ax >= cutoff) {
        // psi is negligible: the remaining integral is -psi0 log(1 + x^-2) / 2
        return shift;
    }
    const auto edges = grid_edges(cutoff);
    std::size_t first = 0;
    while (first < edges.size() && edges[first] <= ax) ++first;

    // panels fully inside [ax, cutoff], filled in parallel when missing
    const std::size_t n_panels = edges.size() - 1;
    const std::size_t start = first;
    const auto panel_values = map_indexed<double>(
        n_panels - std::min(start, n_panels),
        [&](std::size_t i) { return grid_panel(sign, start + i, N, psi0); });
    double inner = 0.0;
    for (double v : panel_values) inner += v;

    auto f = [psi0, N](double xi) { return i2_integrand(xi, psi0, N); };
    const double partial_end = (first < edges.size()) ? edges[first] : cutoff;
    const double partial =
        sign > 0 ? integrate_finite(f, ax, partial_end, i2_spec()) : integrate_finite(f, -partial_end, -ax, i2_spec());

    const double tail = -0.5 * psi0 * std::log1p(1.0 / (cutoff * cutoff));
    // int_x^{sign inf}: for x < 0 the panels run over [-b, -a] and enter with a minus sign
    const double integral = sign > 0 ? (partial + inner + tail) : (-(partial + inner) + tail);
    return log_term + 2.0 * integral + shift;
}

double theta_volume_rho1(double x_vol, int N) { return integral_I1(x_vol) + integral_I2(x_vol, N); }

double theta_sc(double x, int N)
{
    if (x == 0.0) throw DomainError("theta_sc: logarithmically divergent at x = 0");
    const double log_sigma = std::log1p(strip_series(x, 1.0, N).sigma_minus_one);
    return -theta_oo(x) + log_sigma + theta_volume_rho1(x, N);
}

double x_theta_sc_prime(double x, int N)
{
    const double derivative_term = (x == 0.0) ? 0.0 : x * dPsi_dx(x, 1.0, N);
    return theta_oo(x) + vartheta_oo(x) - 2.0 * psi_strip(x, 1.0, N) - derivative_term;
}

double theta_total(double x, double rho, int N)
{
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("theta_total: rho must be positive and finite");
    if (x == 0.0) throw DomainError("theta_total: divergent at x = 0; use casimir_amplitude");
    if (rho < 1.0) return theta_total(x * rho, 1.0 / rho, N) / (rho * rho);
    return theta_oo(x) + theta_sc(x, N) / rho + Psi(x, rho, N);
}

double vartheta_parallel(double x_par, double rho, int N)
{
    if (!(rho > 0.0 && rho <= 1.0)) throw DomainError("vartheta_parallel: requires 0 < rho <= 1");
    const double inv = 1.0 / rho;
    const double derivative_term = (x_par == 0.0) ? 0.0 : x_par * dPsi_dx(x_par, inv, N);
    return vartheta_oo(x_par) - rho * x_theta_sc_prime(x_par, N) - derivative_term - psi_strip(x_par, inv, N);
}

double vartheta_total(double x, double rho, int N)
{
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("vartheta_total: rho must be positive and finite");
    if (rho < 1.0) return vartheta_parallel(x * rho, rho, N) / (rho * rho);
    return -theta_oo(x) + psi_strip(x, rho, N);
}

double casimir_amplitude_series(double rho, int N)
{
    return rho * theta_oo(0.0) + rho * Psi(0.0, rho, N);
}

double casimir_amplitude(double rho)
{
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("casimir_amplitude: rho must be positive and finite");
    const double value = 0.25 * log_dedekind_eta(rho);
    if (rho >= kMinSigmaRho) {
        const double other = casimir_amplitude_series(rho);
        if (std::abs(other - value) > 1e-10 * std::max(1.0, std::abs(value))) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "casimir_amplitude: eta route " << value << " and series route " << other << " disagree";
            throw NumericalError(msg.str());
        }
    }
    return value;
}

double find_rho0(double tol)
{
    if (!(tol >= 1e-16)) throw DomainError("find_rho0: tol must be >= 1e-16");
    double lo = 0.4;
    double hi = 0.7;
    if (!(eisenstein_E2(lo) < 0.0 && eisenstein_E2(hi) > 0.0)) throw NumericalError("find_rho0: E2 does not change sign on (0.4, 0.7)");
    std::uintmax_t iterations = 200;
    auto stop = [tol](double a, double b) { return std::abs(b - a) <= tol; };
    const auto bracket = boost::math::tools::toms748_solve([](double r) { return eisenstein_E2(r); }, lo, hi, stop, iterations);
    return 0.5 * (bracket.first + bracket.second);
}

ScalingPoint lattice_to_scaling(double z, int L, int M)
{
    if (!(z > 0.0 && z < 1.0)) throw DomainError("lattice_to_scaling: requires 0 < z < 1");
    if (L < 1 || M < 1) throw DomainError("lattice_to_scaling: L and M must be >= 1");
    const double z_c = std::numbers::sqrt2 - 1.0;
    return ScalingPoint(2.0 * M * (1.0 - z / z_c), static_cast<double>(L) / M);
}

CasimirSample casimir_sample(double x, double rho, int N)
{
    CasimirSample out;
    out.point = ScalingPoint(x, rho);
    out.theta_total = theta_total(x, rho, N);
    out.vartheta_total = vartheta_total(x, rho, N);
    out.theta_sc = theta_sc(x, N);
    if (rho >= kMinSigmaRho) {
        out.psi_val = psi_strip(x, rho, N);
        out.Psi_val = Psi(x, rho, N);
    } else {
        out.psi_val = std::nan("");
        out.Psi_val = std::nan("");
    }
    return out;
}

PsiCacheStats psi_cache_stats()
{
    PsiCacheStats stats;
    for (PsiMemo* memo : all_memos()) {
        stats.hits += memo->hits.load();
        stats.misses += memo->misses.load();
        std::shared_lock lock(memo->mutex);
        stats.panels += memo->panels.size();
    }
    return stats;
}

void clear_casimir_caches()
{
    for (PsiMemo* memo : all_memos()) {
        std::unique_lock lock(memo->mutex);
        memo->values.clear();
        memo->panels.clear();
        memo->hits = 0;
        memo->misses = 0;
    }
}

}  // namespace casimir_rect

#include "casimir_rect/weights.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "casimir_rect/errors.hpp"
#include "casimir_rect/specialfn.hpp"

namespace casimir_rect {

namespace {

constexpr double kPi = std::numbers::pi;

// (x - s^2) / (t (t cosh t + x sinh t)) with t = sqrt(x^2 + s^2), i.e. the
// counting integrand times dt/ds. Written with e^{-t} pulled out and t -+ x
// formed without cancellation.
double kernel(double s, double x)
{
    const double ax = std::abs(x);
    const double t = std::hypot(ax, s);
    double t_plus_x;
    double t_minus_x;
    if (x >= 0.0) {
        t_plus_x = t + x;
        t_minus_x = s * s / (t + x);
    } else {
        t_minus_x = t + ax;
        t_plus_x = s * s / (t + ax);
    }
    const double d_hat = 0.5 * (t_plus_x + t_minus_x * std::exp(-2.0 * t));
    return (x - s * s) * std::exp(-t) / (t * d_hat);
}

// Width of the nearest complex singularity s = +-i Gamma_1 of the kernel.
double kernel_width(double x) { return std::min(1.0, find_zero(1, x).gamma); }

}  // namespace

std::string to_string(WeightMethod method)
{
    switch (method) {
    case WeightMethod::contour: return "contour";
    case WeightMethod::closed_form_x0: return "closed_form_x0";
    case WeightMethod::special_x_neg1: return "special_x_neg1";
    case WeightMethod::oracle_product: return "oracle_product";
    }
    return "unknown";
}

QuadratureSpec weight_quad_spec()
{
    QuadratureSpec spec;
    spec.rel_tol = 1e-13;
    spec.abs_tol = 1e-15;
    spec.max_depth = 50;
    return spec;
}

double counting_integrand(double t, double x)
{
    const double ax = std::abs(x);
    if (!(t > ax)) throw DomainError("counting_integrand: requires t > |x|");
    const double s = std::sqrt((t - ax) * (t + ax));
    // kernel carries the Jacobian dt/ds = s/t
    return kernel(s, x) * t / s;
}

double counting_identity_integral(double x, const QuadratureSpec& spec)
{
    if (x == -1.0) throw DomainError("counting_identity_integral: x = -1 is degenerate");
    auto f = [x](double s) { return kernel(s, x); };
    return integrate_sinh_mapped(f, kernel_width(x), spec) / kPi;
}

WeightRecord weight_v(int mu, double x, const QuadratureSpec& spec)
{
    if (mu < 1) throw DomainError("weight_v: mu must be >= 1");
    if (mu == 1 && x == -1.0) throw DomainError("weight_v: (mu, x) = (1, -1) needs weight_v_special_xneg1");
    const ZeroRecord z = find_zero(mu, x);
    const double width = std::min(1.0, mu == 1 ? z.gamma : find_zero(1, x).gamma);
    const double gamma_sq = z.gamma * z.gamma;

    SinhMapOptions options;
    std::function<double(double)> log_factor;
    if (z.phi_sq > 0.0) {
        const double phi_sq = z.phi_sq;
        const double x_sq = x * x;
        log_factor = [phi_sq, x_sq](double s) { return std::log1p((x_sq + s * s) / phi_sq); };
    } else {
        const double log_y_sq = std::log(-z.phi_sq);
        log_factor = [gamma_sq, log_y_sq](double s) { return std::log(gamma_sq + s * s) - log_y_sq; };
        // log |1 + t^2/Phi^2| is singular where Gamma^2 + s^2 = y^2
        const double s_star_sq = -z.phi_sq - gamma_sq;
        if (s_star_sq > 0.0) options.breakpoints.push_back(std::sqrt(s_star_sq));
    }
    auto f = [&log_factor, x](double s) { return log_factor(s) * kernel(s, x); };
    const double integral = integrate_sinh_mapped(f, width, spec, options);

    const double gamma_minus_x = (x > 0.0) ? z.phi_sq / (z.gamma + x) : z.gamma - x;
    const double denom = x * (1.0 + x) + z.phi_sq;
    if ((denom < 0.0) != z.imaginary() || denom == 0.0) {
        std::ostringstream msg;
        msg << "weight_v: prefactor sign inconsistent for mu=" << mu << ", x=" << x;
        throw NumericalError(msg.str());
    }
    WeightRecord rec;
    rec.mu = mu;
    rec.method = WeightMethod::contour;
    rec.log_v = std::log(4.0 * gamma_minus_x) + std::log(gamma_sq) - std::log(std::abs(denom)) +
                parity(mu) * integral / kPi;
    rec.v = std::exp(rec.log_v);
    return rec;
}

WeightRecord weight_v_special_xneg1(const QuadratureSpec& spec)
{
    // x = -1: integrand log(1 + s^2) * (-t / (t cosh t - sinh t))
    auto f = [](double s) {
        const double t = std::hypot(1.0, s);
        const double d_hat = 0.5 * (s * s / (t + 1.0) + (t + 1.0) * std::exp(-2.0 * t));
        return -std::log1p(s * s) * t * std::exp(-t) / d_hat;
    };
    const double integral = integrate_sinh_mapped(f, 1.0, spec);
    WeightRecord rec;
    rec.mu = 1;
    rec.method = WeightMethod::special_x_neg1;
    rec.log_v = std::log(12.0) + integral / kPi;
    rec.v = std::exp(rec.log_v);
    return rec;
}

WeightRecord weight_v_closed_x0(int mu)
{
    if (mu < 1) throw DomainError("weight_v_closed_x0: mu must be >= 1");
    const int sigma = parity(mu);
    const double phi0 = (mu - 0.5) * kPi;
    const double ratio = euler_beta(0.5 * mu, 0.5) / (std::numbers::sqrt2 * kPi);
    WeightRecord rec;
    rec.mu = mu;
    rec.method = WeightMethod::closed_form_x0;
    rec.log_v = std::log(4.0) + (1.0 + sigma) * std::log(phi0) + 2.0 * sigma * std::log(ratio);
    rec.v = std::exp(rec.log_v);
    return rec;
}

WeightRecord weight_auto(int mu, double x, const QuadratureSpec& spec)
{
    if (x == 0.0) return weight_v_closed_x0(mu);
    if (mu == 1 && x == -1.0) return weight_v_special_xneg1(spec);
    return weight_v(mu, x, spec);
}

GeneratingCheck weight_w_generating_check(double eta, int n_terms)
{
    if (!(std::abs(eta) < 1.0)) throw DomainError("weight_w_generating_check: requires |eta| < 1");
    if (n_terms < 1) throw DomainError("weight_w_generating_check: n_terms must be >= 1");
    // Taylor coefficients of (1 - eta)^(-3/2) and (1 + eta)^(1/2), convolved
    std::vector<double> a(static_cast<std::size_t>(n_terms));
    std::vector<double> b(static_cast<std::size_t>(n_terms));
    a[0] = 1.0;
    b[0] = 1.0;
    for (int k = 1; k < n_terms; ++k) {
        a[k] = a[k - 1] * (1.5 + (k - 1)) / k;
        b[k] = b[k - 1] * (0.5 - (k - 1)) / k;
    }
    GeneratingCheck out;
    const double scale = kPi / std::numbers::sqrt2;
    double power = 1.0;
    for (int k = 0; k < n_terms; ++k) {
        double coef = 0.0;
        for (int j = 0; j <= k; ++j) coef += a[j] * b[k - j];
        coef *= scale;
        const double w = std::sqrt(weight_v_closed_x0(k + 1).v);
        out.max_error = std::max(out.max_error, std::abs(coef - w));
        out.partial_sum += w * power;
        power *= eta;
    }
    out.closed_form = scale * std::pow(1.0 - eta, -1.5) * std::sqrt(1.0 + eta);
    return out;
}

namespace {

double oracle_log_p(int mu, const std::vector<ZeroRecord>& zeros)
{
    const int n = static_cast<int>(zeros.size());
    const int sigma_mu = parity(mu);
    const double pm = zeros[static_cast<std::size_t>(mu - 1)].phi_sq;
    std::vector<double> partial;
    partial.reserve(static_cast<std::size_t>(n));
    double sum = (pm != 0.0) ? std::log(std::abs(pm)) : 0.0;
    for (int nu = 1; nu <= n; ++nu) {
        if (nu == mu) continue;
        const double pn = zeros[static_cast<std::size_t>(nu - 1)].phi_sq;
        // at x = -1, Phi_1^2 = 0: the factor (1 - Phi_mu^2/eps)^(-s) loses its
        // eps-dependence against the same factor in the normalization
        const double factor = (pn == 0.0) ? std::abs(pm) : std::abs(1.0 - pm / pn);
        sum += -sigma_mu * parity(nu) * std::log(factor);
        partial.push_back(sum);
    }
    constexpr std::size_t kTail = 12;
    if (partial.size() < kTail) throw DomainError("oracle_product_p: n_zeros too small");
    std::vector<double> tail(partial.end() - kTail, partial.end());
    for (int pass = 0; pass < 10; ++pass) {
        for (std::size_t i = 0; i + 1 < tail.size(); ++i) tail[i] = 0.5 * (tail[i] + tail[i + 1]);
        tail.pop_back();
    }
    return tail.back();
}

}  // namespace

double oracle_product_p(int mu, double x, int n_zeros)
{
    if (mu < 1) throw DomainError("oracle_product_p: mu must be >= 1");
    if (n_zeros < mu + 20) throw DomainError("oracle_product_p: n_zeros must exceed mu by at least 20");
    const auto zeros = find_zeros(n_zeros, x);
    return std::exp(oracle_log_p(mu, zeros));
}

double oracle_weight_product(int mu, int nu, double x, int n_zeros)
{
    if (parity(mu) == parity(nu)) throw DomainError("oracle_weight_product: needs opposite parities");
    if (n_zeros < std::max(mu, nu) + 20) throw DomainError("oracle_weight_product: n_zeros too small");
    const auto zeros = find_zeros(n_zeros, x);
    double log_product = oracle_log_p(mu, zeros) + oracle_log_p(nu, zeros);
    for (int k : {mu, nu}) {
        const int s = parity(k);
        log_product += s * std::log(std::abs(zeros[static_cast<std::size_t>(k - 1)].gamma - s * x));
    }
    return std::exp(log_product);
}

std::shared_ptr<const Spectrum> build_spectrum(double x, int count, Exec exec)
{
    if (count < 1) throw DomainError("build_spectrum: count must be >= 1");
    auto spec = std::make_shared<Spectrum>();
    spec->x = x;
    spec->zeros = map_indexed<ZeroRecord>(
        static_cast<std::size_t>(count), [x](std::size_t i) { return find_zero(static_cast<int>(i) + 1, x); }, exec);
    spec->weights = map_indexed<WeightRecord>(
        static_cast<std::size_t>(count), [x](std::size_t i) { return weight_auto(static_cast<int>(i) + 1, x); },
        exec);
    return spec;
}

namespace {

constexpr std::size_t kSpectrumCacheCap = 1u << 16;

struct SpectrumCache {
    std::shared_mutex mutex;
    std::unordered_map<std::uint64_t, std::shared_ptr<const Spectrum>> entries;
};

SpectrumCache& spectrum_cache()
{
    static SpectrumCache cache;
    return cache;
}

}  // namespace

std::shared_ptr<const Spectrum> cached_spectrum(double x, int count)
{
    const std::uint64_t key = std::bit_cast<std::uint64_t>(x == 0.0 ? 0.0 : x);
    SpectrumCache& cache = spectrum_cache();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end() && it->second->size() >= count) return it->second;
    }
    // Built outside the lock; a concurrent duplicate build is harmless.
    // The serial path avoids nested OpenMP teams when callers are already parallel.
    auto built = build_spectrum(x, count, Exec::serial);
    std::unique_lock lock(cache.mutex);
    auto& slot = cache.entries[key];
    if (!slot || slot->size() < count) {
        if (cache.entries.size() > kSpectrumCacheCap) {
            cache.entries.clear();
            cache.entries[key] = built;
            return built;
        }
        slot = built;
    }
    return slot;
}

void clear_spectrum_cache()
{
    SpectrumCache& cache = spectrum_cache();
    std::unique_lock lock(cache.mutex);
    cache.entries.clear();
}

std::size_t spectrum_cache_size()
{
    SpectrumCache& cache = spectrum_cache();
    std::shared_lock lock(cache.mutex);
    return cache.entries.size();
}

}  // namespace casimir_rect

#include "casimir_rect/sigma.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "casimir_rect/errors.hpp"

namespace casimir_rect {

namespace {

constexpr double kPi = std::numbers::pi;

void require_rho(double rho, const char* who)
{
    if (!(rho >= kMinSigmaRho) || std::isnan(rho)) {
        throw DomainError(std::string(who) + ": rho must be >= 0.5 (use the rho -> 1/rho symmetry below)");
    }
}

void collect(int max_mu, int remaining, IndexSet& current, std::vector<IndexSet>& out)
{
    if (remaining == 0) {
        if (is_balanced(current)) {
            IndexSet sorted = current;
            std::sort(sorted.begin(), sorted.end());
            out.push_back(std::move(sorted));
        }
        return;
    }
    for (int mu = std::min(max_mu, (remaining + 1) / 2); mu >= 1; --mu) {
        current.push_back(mu);
        collect(mu - 1, remaining - (2 * mu - 1), current, out);
        current.pop_back();
    }
}

// enumerate_sets(1..N) concatenated, memoized per N
std::shared_ptr<const std::vector<std::pair<int, IndexSet>>> sets_up_to(int N)
{
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const std::vector<std::pair<int, IndexSet>>>> memo;
    std::lock_guard lock(mutex);
    auto it = memo.find(N);
    if (it != memo.end()) return it->second;
    auto all = std::make_shared<std::vector<std::pair<int, IndexSet>>>();
    for (int n = 1; n <= N; ++n) {
        for (auto& s : enumerate_sets(n)) all->emplace_back(n, std::move(s));
    }
    memo[N] = all;
    return all;
}

// Sum of a_s exp(-rho Gamma_s) and of Gamma_s a_s exp(-rho Gamma_s), order by
// order, with the smallest-Gamma terms of each order added last.
struct Sums {
    double value = 0.0;
    double gamma_weighted = 0.0;
};

Sums sum_terms(std::vector<SubsetTerm> terms, double rho)
{
    std::stable_sort(terms.begin(), terms.end(), [](const SubsetTerm& l, const SubsetTerm& r) {
        if (l.order != r.order) return l.order < r.order;
        return l.gamma_sum > r.gamma_sum;
    });
    Sums total;
    std::size_t i = 0;
    while (i < terms.size()) {
        Sums block;
        const int order = terms[i].order;
        for (; i < terms.size() && terms[i].order == order; ++i) {
            const double w = std::exp(terms[i].log_a - rho * terms[i].gamma_sum);
            block.value += w;
            block.gamma_weighted += terms[i].gamma_sum * w;
        }
        total.value += block.value;
        total.gamma_weighted += block.gamma_weighted;
    }
    return total;
}

}  // namespace

std::string to_string(SigmaRoute route) { return route == SigmaRoute::series ? "series" : "determinant"; }

bool is_balanced(const IndexSet& s)
{
    int charge = 0;
    for (int mu : s) charge += parity(mu);
    return charge == 0;
}

std::vector<IndexSet> enumerate_sets(int n)
{
    if (n < 1) throw DomainError("enumerate_sets: n must be >= 1");
    std::vector<IndexSet> out;
    IndexSet current;
    collect(2 * n, 4 * n, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

SubsetTerm amplitude(const IndexSet& s, const Spectrum& spectrum)
{
    if (s.empty() || !is_balanced(s)) throw DomainError("amplitude: index set must be non-empty and balanced");
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] >= s[i + 1]) throw DomainError("amplitude: index set must be strictly increasing");
    }
    if (s.front() < 1 || s.back() > spectrum.size()) throw DomainError("amplitude: index outside the spectrum");

    SubsetTerm term;
    term.s = s;
    int half_weight = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int mu = s[i];
        half_weight += 2 * mu - 1;
        term.log_a += spectrum.weight(mu).log_v;
        term.gamma_sum += spectrum.zero(mu).gamma;
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const int nu = s[j];
            const double diff = spectrum.zero(mu).phi_sq - spectrum.zero(nu).phi_sq;
            term.log_a += 2.0 * parity(mu) * parity(nu) * std::log(std::abs(diff));
        }
    }
    term.order = half_weight / 4;
    term.a = std::exp(term.log_a);
    return term;
}

SubsetTerm amplitude(const IndexSet& s, double x)
{
    if (s.empty()) throw DomainError("amplitude: empty index set");
    const int max_mu = *std::max_element(s.begin(), s.end());
    return amplitude(s, *cached_spectrum(x, max_mu));
}

std::vector<SubsetTerm> series_terms(double x, int N, Exec exec)
{
    if (N < 1) throw DomainError("series order N must be >= 1");
    const auto sets = sets_up_to(N);
    const auto spectrum = cached_spectrum(x, 2 * N);
    return map_indexed<SubsetTerm>(
        sets->size(), [&](std::size_t i) { return amplitude((*sets)[i].second, *spectrum); }, exec);
}

SigmaResult sigma_series(double x, double rho, int N, Exec exec)
{
    require_rho(rho, "sigma_series");
    const Sums sums = sum_terms(series_terms(x, N, exec), rho);
    SigmaResult result;
    result.value = 1.0 + sums.value;
    result.order = N;
    result.route = SigmaRoute::series;
    result.error_bound = std::exp(-2.0 * kPi * rho * (N + 1));
    return result;
}

SigmaResult sigma_det(double x, double rho, int modes)
{
    require_rho(rho, "sigma_det");
    if (modes < 1 || modes > 64) throw DomainError("sigma_det: modes must be in [1, 64]");
    const auto spectrum = cached_spectrum(x, 2 * modes);
    auto scaled = [&](int mu) {
        return std::exp(spectrum->weight(mu).log_v - rho * spectrum->zero(mu).gamma);
    };
    auto cauchy = [&](int mu, int nu) { return 1.0 / (spectrum->zero(nu).phi_sq - spectrum->zero(mu).phi_sq); };

    // Y = -A_e T_eo A_o T_oe with A = diag(v exp(-rho Gamma))
    Eigen::MatrixXd t_eo(modes, modes);
    Eigen::MatrixXd t_oe(modes, modes);
    Eigen::VectorXd a_e(modes);
    Eigen::VectorXd a_o(modes);
    for (int i = 0; i < modes; ++i) {
        const int even = 2 * (i + 1);
        const int odd = 2 * i + 1;
        a_e(i) = scaled(even);
        a_o(i) = scaled(odd);
        for (int j = 0; j < modes; ++j) {
            t_eo(i, j) = cauchy(even, 2 * j + 1);
            t_oe(i, j) = cauchy(odd, 2 * (j + 1));
        }
    }
    const Eigen::MatrixXd y = -(a_e.asDiagonal() * t_eo * a_o.asDiagonal() * t_oe);
    const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(modes, modes) + y;

    SigmaResult result;
    result.value = Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
    result.order = modes;
    result.route = SigmaRoute::determinant;
    result.error_bound = std::exp(-2.0 * kPi * rho * (modes + 1));
    return result;
}

double sigma_route_difference(double x, double rho, int N)
{
    using Wide = boost::multiprecision::cpp_bin_float_50;
    using WideMatrix = Eigen::Matrix<Wide, Eigen::Dynamic, Eigen::Dynamic>;
    require_rho(rho, "sigma_route_difference");
    if (N < 1 || N > 64) throw DomainError("sigma_route_difference: N must be in [1, 64]");
    const auto spectrum = cached_spectrum(x, 2 * N);
    auto scaled = [&](int mu) {
        return exp(Wide(spectrum->weight(mu).log_v) - Wide(rho) * Wide(spectrum->zero(mu).gamma));
    };
    auto phi_sq = [&](int mu) { return Wide(spectrum->zero(mu).phi_sq); };

    Wide series = 1;
    for (const auto& entry : *sets_up_to(N)) {
        Wide term = 1;
        const IndexSet& s = entry.second;
        for (std::size_t i = 0; i < s.size(); ++i) {
            term *= scaled(s[i]);
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                const Wide diff = phi_sq(s[i]) - phi_sq(s[j]);
                const Wide sq = diff * diff;
                term *= (parity(s[i]) == parity(s[j])) ? sq : 1 / sq;
            }
        }
        series += term;
    }

    WideMatrix m = WideMatrix::Identity(N, N);
    for (int i = 0; i < N; ++i) {
        const int even = 2 * (i + 1);
        for (int k = 0; k < N; ++k) {
            const int even2 = 2 * (k + 1);
            Wide acc = 0;
            for (int j = 0; j < N; ++j) {
                const int odd = 2 * j + 1;
                acc += scaled(odd) / ((phi_sq(odd) - phi_sq(even)) * (phi_sq(even2) - phi_sq(odd)));
            }
            m(i, k) -= scaled(even) * acc;
        }
    }
    const Wide det = m.partialPivLu().determinant();
    return static_cast<double>(det - series);
}

StripSeries strip_series(double x, double rho, int N)
{
    require_rho(rho, "strip_series");
    const Sums sums = sum_terms(series_terms(x, N, Exec::serial), rho);
    StripSeries out;
    out.sigma_minus_one = sums.value;
    out.psi = -sums.gamma_weighted / (1.0 + sums.value);
    return out;
}

double Psi(double x, double rho, int N) { return -std::log1p(strip_series(x, rho, N).sigma_minus_one) / rho; }

double psi_strip(double x, double rho, int N) { return strip_series(x, rho, N).psi; }

double dPsi_dx(double x, double rho, int N)
{
    const double h = std::max(1e-4, 1e-4 * std::abs(x));
    auto central = [&](double step) { return (Psi(x + step, rho, N) - Psi(x - step, rho, N)) / (2.0 * step); };
    const double coarse = central(h);
    const double fine = central(0.5 * h);
    const double refined = (4.0 * fine - coarse) / 3.0;
    if (!std::isfinite(refined)) throw NumericalError("dPsi_dx: non-finite finite difference");
    return refined;
}

}  // namespace casimir_rect

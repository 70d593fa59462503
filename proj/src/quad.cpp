#include "casimir_rect/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "casimir_rect/errors.hpp"

namespace casimir_rect {

namespace {

// Kronrod 15-point abscissae (positive half) with the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
    double a;
    double b;
    double value;
    double error;
    int depth;

    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const Integrand& f, double a, double b, int depth)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f_center = f(center);
    double kronrod = f_center * kWgk[7];
    double gauss = f_center * kWg[3];
    double abs_sum = std::abs(kronrod);
    std::array<double, 7> f1{};
    std::array<double, 7> f2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        kronrod += kWgk[j] * (f1[j] + f2[j]);
        abs_sum += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1[j] + f2[j]);
    }
    const double mean = 0.5 * kronrod;
    double asc = kWgk[7] * std::abs(f_center - mean);
    for (int j = 0; j < 7; ++j) asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    const double result = kronrod * half;
    const double result_abs = abs_sum * std::abs(half);
    const double result_asc = asc * std::abs(half);
    double error = std::abs((kronrod - gauss) * half);
    if (result_asc != 0.0 && error != 0.0) {
        error = result_asc * std::min(1.0, std::pow(200.0 * error / result_asc, 1.5));
    }
    if (result_abs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
        error = std::max(50.0 * kEps * result_abs, error);
    }
    if (!std::isfinite(result)) {
        std::ostringstream msg;
        msg << "quadrature: non-finite integrand on [" << a << ", " << b << "]";
        throw NumericalError(msg.str());
    }
    return {a, b, result, error, depth};
}

}  // namespace

void QuadratureSpec::validate() const
{
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("QuadratureSpec: tolerances must be positive");
    if (max_depth < 1) throw DomainError("QuadratureSpec: max_depth must be >= 1");
    if (!(decay_scale > 0.0)) throw DomainError("QuadratureSpec: decay_scale must be positive");
}

double integrate_finite(const Integrand& f, double a, double b, const QuadratureSpec& spec)
{
    spec.validate();
    if (!(a <= b)) throw DomainError("integrate_finite: requires a <= b");
    if (a == b) return 0.0;

    std::priority_queue<Panel> heap;
    Panel first = gauss_kronrod(f, a, b, 0);
    double total = first.value;
    double total_error = first.error;
    heap.push(first);

    // Accumulated values drift from the re-summed panel values; re-sum
    // before the final acceptance test.
    auto resum = [&heap]() {
        auto copy = heap;
        std::vector<Panel> panels;
        while (!copy.empty()) {
            panels.push_back(copy.top());
            copy.pop();
        }
        std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
        double v = 0.0;
        double e = 0.0;
        for (const Panel& p : panels) {
            v += p.value;
            e += p.error;
        }
        return std::pair<double, double>{v, e};
    };

    while (true) {
        if (total_error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
            const auto [v, e] = resum();
            total = v;
            total_error = e;
            if (total_error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) return total;
        }
        Panel worst = heap.top();
        if (worst.depth >= spec.max_depth) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "integrate_finite: depth " << spec.max_depth << " exhausted; worst panel [" << worst.a
                << ", " << worst.b << "] error " << worst.error << ", total " << total << " +- " << total_error;
            throw NumericalError(msg.str());
        }
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
        const Panel right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
}

double integrate_panels(const Integrand& f, const std::vector<double>& edges, const QuadratureSpec& spec)
{
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) sum += integrate_finite(f, edges[i], edges[i + 1], spec);
    return sum;
}

double integrate_semi_infinite(const Integrand& f, double a, const QuadratureSpec& spec)
{
    spec.validate();
    const double scale = spec.decay_scale;
    double range = 0.0;
    for (double step : {0.0, 0.25, 0.5, 1.0, 2.0}) range = std::max(range, std::abs(f(a + step * scale)));
    range = std::max(range, spec.abs_tol);
    const double end = a + scale * std::log(10.0 * range / spec.abs_tol);
    std::vector<double> edges{a};
    for (double t = a + scale; t < end; t += 4.0 * scale) edges.push_back(t);
    edges.push_back(end);
    return integrate_panels(f, edges, spec);
}

double integrate_sqrt_singularity(const Integrand& g, double x_abs, const QuadratureSpec& spec)
{
    QuadratureSpec inner = spec;
    inner.decay_scale = std::max(spec.decay_scale, 1.0);
    const double split = std::max(1.0, std::abs(x_abs));
    return integrate_finite(g, 0.0, split, spec) + integrate_semi_infinite(g, split, inner);
}

double integrate_sinh_mapped(const Integrand& f, double width, const QuadratureSpec& spec,
                             const SinhMapOptions& options)
{
    spec.validate();
    if (!(width > 0.0)) throw DomainError("integrate_sinh_mapped: width must be positive");
    auto mapped = [&f, width](double u) { return f(width * std::sinh(u)) * width * std::cosh(u); };

    // Extend the u range until the mapped integrand stays negligible.
    const double cutoff = 1e-3 * spec.abs_tol;
    std::vector<double> edges{0.0};
    double u = 0.0;
    int quiet = 0;
    while (quiet < 2 && u < 300.0) {
        u += 1.0;
        edges.push_back(u);
        quiet = (std::abs(mapped(u)) < cutoff) ? quiet + 1 : 0;
    }
    for (double s : options.breakpoints) {
        if (!(s > 0.0)) continue;
        const double ub = std::asinh(s / width);
        if (ub < edges.back()) edges.push_back(ub);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    if (!options.soften_origin) return integrate_panels(mapped, edges, spec);
    // first panel [0, edges[1]] through u = v^2
    const double u1 = edges[1];
    auto softened = [&mapped](double v) { return mapped(v * v) * 2.0 * v; };
    double sum = integrate_finite(softened, 0.0, std::sqrt(u1), spec);
    edges.erase(edges.begin());
    return sum + integrate_panels(mapped, edges, spec);
}

}  // namespace casimir_rect

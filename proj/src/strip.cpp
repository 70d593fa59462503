#include "casimir_rect/strip.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "casimir_rect/errors.hpp"
#include "casimir_rect/roots.hpp"

namespace casimir_rect {

namespace {

constexpr double kPi = std::numbers::pi;

// log(1 + e^l) without overflow
double log1p_exp(double l) { return l < 0.0 ? std::log1p(std::exp(l)) : l + std::log1p(std::exp(-l)); }

// e^l / (1 + e^l)
double logistic(double l) { return l < 0.0 ? std::exp(l) / (1.0 + std::exp(l)) : 1.0 / (1.0 + std::exp(-l)); }

}  // namespace

QuadratureSpec strip_quad_spec()
{
    QuadratureSpec spec;
    spec.rel_tol = 1e-13;
    spec.abs_tol = 1e-15;
    spec.max_depth = 60;
    return spec;
}

double strip_feature_width(double x) { return std::min(1.0, find_zero(1, x).gamma); }

double strip_log_q(double w, double x)
{
    const double big_w = std::hypot(x, w);
    if (x >= 0.0) return 2.0 * (std::log(w) - std::log(big_w + x)) - 2.0 * big_w;
    return 2.0 * (std::log(big_w - x) - std::log(w)) - 2.0 * big_w;
}

double theta_oo(double x, const QuadratureSpec& spec)
{
    auto f = [x](double w) { return log1p_exp(strip_log_q(w, x)); };
    SinhMapOptions options;
    options.soften_origin = x < 0.0;
    return -integrate_sinh_mapped(f, strip_feature_width(x), spec, options) / (2.0 * kPi);
}

double vartheta_oo(double x, const QuadratureSpec& spec)
{
    auto f = [x](double w) { return std::hypot(x, w) * logistic(strip_log_q(w, x)); };
    return -integrate_sinh_mapped(f, strip_feature_width(x), spec) / kPi;
}

double theta_oo_derivative(double x, const QuadratureSpec& spec)
{
    if (x == 0.0) throw DomainError("theta_oo_derivative: logarithmically divergent at x = 0");
    // d log q / dx = -2 (1 + x) / W
    auto f = [x](double w) { return logistic(strip_log_q(w, x)) / std::hypot(x, w); };
    return (1.0 + x) / kPi * integrate_sinh_mapped(f, strip_feature_width(x), spec);
}

StripSample strip_sample(double x, const QuadratureSpec& spec)
{
    return {x, theta_oo(x, spec), vartheta_oo(x, spec)};
}

}  // namespace casimir_rect

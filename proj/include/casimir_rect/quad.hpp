#pragma once

#include <functional>
#include <vector>

namespace casimir_rect {

struct QuadratureSpec {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    int max_depth = 40;       ///< bisection depth cap for a single panel
    double decay_scale = 1.0; ///< e-folding length used to truncate semi-infinite ranges

    void validate() const;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b]. Throws
/// NumericalError naming the worst panel when max_depth is exhausted.
double integrate_finite(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

/// Sum of integrate_finite over consecutive panels [edges[i], edges[i+1]].
double integrate_panels(const Integrand& f, const std::vector<double>& edges,
                        const QuadratureSpec& spec = {});

/// Integral over [a, inf) of an integrand decaying at least like
/// exp(-(t-a)/decay_scale). The range is cut at
/// T = a + decay_scale * ln(10 * range / abs_tol), range being the largest
/// sampled |f| near a.
double integrate_semi_infinite(const Integrand& f, double a, const QuadratureSpec& spec = {});

/// Integral over s in (0, inf) of g(s), where g is the integrand after the
/// substitution t = sqrt(x_abs^2 + s^2) removed a 1/sqrt(t^2 - x^2) endpoint
/// singularity. x_abs only sets the scale for splitting the range.
double integrate_sqrt_singularity(const Integrand& g, double x_abs, const QuadratureSpec& spec = {});

struct SinhMapOptions {
    std::vector<double> breakpoints;  ///< interior points of s (e.g. log singularities)
    bool soften_origin = false;       ///< extra u = v^2 map for log-singular f at s = 0
};

/// Integral over [0, inf) using s = width * sinh(u), which resolves a feature
/// of the given width near s = 0 and spaces the nodes exponentially further out.
/// f must decay at least exponentially in s.
double integrate_sinh_mapped(const Integrand& f, double width, const QuadratureSpec& spec = {},
                             const SinhMapOptions& options = {});

}  // namespace casimir_rect

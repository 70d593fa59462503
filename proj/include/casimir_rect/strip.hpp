#pragma once

#include "casimir_rect/quad.hpp"

namespace casimir_rect {

struct StripSample {
    double x = 0.0;
    double theta_oo = 0.0;
    double vartheta_oo = 0.0;
};

QuadratureSpec strip_quad_spec();

/// log(q) with q = ((W - x)/(W + x)) exp(-2W), W = sqrt(x^2 + w^2); shared by
/// the strip integrands and I1.
double strip_log_q(double w, double x);

/// Casimir potential of the infinite open-open strip,
/// -(1/2 pi) int_0^inf dw log(1 + q(w)).
double theta_oo(double x, const QuadratureSpec& spec = strip_quad_spec());

/// Casimir force of the strip, -(1/pi) int_0^inf dw W q / (1 + q).
double vartheta_oo(double x, const QuadratureSpec& spec = strip_quad_spec());

/// d/dx theta_oo from the x-differentiated integrand.
double theta_oo_derivative(double x, const QuadratureSpec& spec = strip_quad_spec());

StripSample strip_sample(double x, const QuadratureSpec& spec = strip_quad_spec());

/// Scale of the integrand feature near w = 0 (min(1, Gamma_1(x))).
double strip_feature_width(double x);

}  // namespace casimir_rect

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "casimir_rect/parallel.hpp"
#include "casimir_rect/quad.hpp"
#include "casimir_rect/roots.hpp"

namespace casimir_rect {

enum class WeightMethod { contour, closed_form_x0, special_x_neg1, oracle_product };

std::string to_string(WeightMethod method);

/// Weight v_mu(x) of one zero. log_v is kept alongside v because amplitudes
/// are assembled in log space.
struct WeightRecord {
    int mu = 0;
    double v = 0.0;
    double log_v = 0.0;
    WeightMethod method = WeightMethod::contour;
};

/// Tolerances used for the weight integrals unless the caller overrides them.
QuadratureSpec weight_quad_spec();

/// R(t) = (x + x^2 - t^2) / (sqrt(t^2 - x^2) (t cosh t + x sinh t)) for t > |x|.
double counting_integrand(double t, double x);

/// (1/pi) * integral of R over t > |x|; 0 for x > 0 and -1 for x < 0.
double counting_identity_integral(double x, const QuadratureSpec& spec = weight_quad_spec());

/// Weight from the real-axis form of the contour integral. (mu, x) = (1, -1)
/// is rejected; use weight_v_special_xneg1.
WeightRecord weight_v(int mu, double x, const QuadratureSpec& spec = weight_quad_spec());

/// v_1 at x = -1, about 6.39303337215.
WeightRecord weight_v_special_xneg1(const QuadratureSpec& spec = weight_quad_spec());

/// Closed form at x = 0: 4 Phi0^(1+sigma) [B(mu/2, 1/2) / (sqrt 2 pi)]^(2 sigma).
WeightRecord weight_v_closed_x0(int mu);

/// Dispatches to the special value at (1, -1), the closed form at x = 0 and
/// the contour integral elsewhere.
WeightRecord weight_auto(int mu, double x, const QuadratureSpec& spec = weight_quad_spec());

struct GeneratingCheck {
    double max_error = 0.0;    ///< max_mu |Taylor coefficient - sqrt(v_mu^(0))|
    double closed_form = 0.0;  ///< W(eta) from the closed-form generating function
    double partial_sum = 0.0;  ///< sum_{mu <= n_terms} sqrt(v_mu^(0)) eta^(mu-1)
};

/// Compares the Taylor coefficients of
/// W(eta) = (pi / sqrt 2) (1 - eta)^(-3/2) (1 + eta)^(1/2) with sqrt(v_mu^(0)).
GeneratingCheck weight_w_generating_check(double eta, int n_terms);

/// Regularized product p_mu = Phi_mu^2 prod'_nu (1 - Phi_mu^2/Phi_nu^2)^(-sigma_mu sigma_nu)
/// over the first n_zeros zeros, with Euler averaging of the alternating tail.
double oracle_product_p(int mu, double x, int n_zeros = 400);

/// v_mu * v_nu for opposite parities, built from oracle_product_p. Only this
/// combination is free of the parity-dependent normalization.
double oracle_weight_product(int mu, int nu, double x, int n_zeros = 400);

/// Zeros and weights mu = 1..size at one x.
struct Spectrum {
    double x = 0.0;
    std::vector<ZeroRecord> zeros;
    std::vector<WeightRecord> weights;

    int size() const { return static_cast<int>(zeros.size()); }
    const ZeroRecord& zero(int mu) const { return zeros.at(static_cast<std::size_t>(mu - 1)); }
    const WeightRecord& weight(int mu) const { return weights.at(static_cast<std::size_t>(mu - 1)); }
};

/// Uncached construction; exec selects the OpenMP path or the serial reference.
std::shared_ptr<const Spectrum> build_spectrum(double x, int count, Exec exec = Exec::parallel);

/// Memoized build_spectrum, safe for concurrent callers. A cached spectrum
/// with at least `count` modes is reused.
std::shared_ptr<const Spectrum> cached_spectrum(double x, int count);

void clear_spectrum_cache();
std::size_t spectrum_cache_size();

}  // namespace casimir_rect

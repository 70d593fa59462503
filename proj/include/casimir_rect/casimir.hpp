#pragma once

#include <cstddef>

#include "casimir_rect/quad.hpp"
#include "casimir_rect/roots.hpp"

namespace casimir_rect {

inline constexpr int kDefaultOrder = 8;

struct CasimirSample {
    ScalingPoint point{0.0, 1.0};
    double theta_total = 0.0;
    double vartheta_total = 0.0;
    double theta_sc = 0.0;
    double psi_val = 0.0;
    double Psi_val = 0.0;
};

/// I1(x) = -(1/2 pi) int_0^inf ds Li2(-q(s)) / sqrt(x^2 + s^2); x != 0.
double integral_I1(double x_vol, const QuadratureSpec& spec = {});

/// I2(x) = psi0 log(1 + x^-2) + 2 int_x^{sign(x) inf} dxi [psi(xi,1) - psi0/(1+xi^2)] / xi,
/// plus -log 2 on the low-temperature side; psi0 = psi(0, 1).
/// Panel integrals on a fixed grid are memoized and shared across calls.
double integral_I2(double x_vol, int N = kDefaultOrder);

/// Theta_o(x, 1) = I1(x) + I2(x).
double theta_volume_rho1(double x_vol, int N = kDefaultOrder);

/// Surface-corner part: -Theta_oo(x) + log Sigma(x, 1) + Theta_o(x, 1).
double theta_sc(double x, int N = kDefaultOrder);

/// x Theta_sc'(x) = Theta_oo + vartheta_oo - 2 psi(x,1) - x dPsi/dx(x,1);
/// finite at x = 0, where it equals -1/8.
double x_theta_sc_prime(double x, int N = kDefaultOrder);

/// Total Casimir potential; x = 0 is rejected (see casimir_amplitude).
double theta_total(double x, double rho, int N = kDefaultOrder);

/// Total Casimir force.
double vartheta_total(double x, double rho, int N = kDefaultOrder);

/// Force in the parallel scaling variable x_par = x rho for rho <= 1:
/// vartheta_oo(x_par) - rho [x Theta_sc'](x_par) - x_par dPsi/dx(x_par, 1/rho) - psi(x_par, 1/rho).
/// vartheta_total(x, rho) = rho^-2 vartheta_parallel(x rho, rho) for rho < 1.
double vartheta_parallel(double x_par, double rho, int N = kDefaultOrder);

/// Delta(rho) = (1/4) log eta(i rho); checked internally against the series route.
double casimir_amplitude(double rho);

/// rho Theta_oo(0) + rho Psi(0, rho).
double casimir_amplitude_series(double rho, int N = 10);

/// Zero of E2(i rho) in (0.4, 0.7).
double find_rho0(double tol = 1e-15);

/// x = 2M(1 - z/z_c), rho = L/M with z_c = sqrt 2 - 1.
ScalingPoint lattice_to_scaling(double z, int L, int M);

CasimirSample casimir_sample(double x, double rho, int N = kDefaultOrder);

struct PsiCacheStats {
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t panels = 0;
};

/// Counters of the psi(xi, 1) memo and of memoized I2 panels.
PsiCacheStats psi_cache_stats();
void clear_casimir_caches();

}  // namespace casimir_rect

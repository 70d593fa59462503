#pragma once

#include <vector>

#include "casimir_rect/parallel.hpp"

namespace casimir_rect {

/// Lattice gas of spins s_mu in {0, 1}, mu = 1..n_spins, with pair couplings
/// K_munu = -sigma_mu sigma_nu log(v_mu v_nu / (Phi_mu^2 - Phi_nu^2)^2), field
/// rho Gamma_mu and the hard constraint sum sigma_mu s_mu = 0.
struct EffectiveModel {
    double x = 0.0;
    int n_spins = 0;
    std::vector<double> couplings;  ///< row-major n_spins x n_spins, zero diagonal
    std::vector<double> moments;    ///< Gamma_mu
    std::vector<int> sigma;

    double coupling(int mu, int nu) const
    {
        return couplings[static_cast<std::size_t>((mu - 1) * n_spins + (nu - 1))];
    }
};

inline constexpr int kMaxEnumeratedSpins = 24;

EffectiveModel build_model(double x, int n_spins);

/// Z_eff over all balanced configurations.
double enumerate_partition(const EffectiveModel& model, double rho, Exec exec = Exec::parallel);

/// M_eff = sum_mu Gamma_mu <s_mu>, so that psi = -M_eff.
double magnetization(const EffectiveModel& model, double rho, Exec exec = Exec::parallel);

/// 1 + sum of a_s exp(-rho Gamma_s) over balanced index sets inside {1..n_spins}
/// (all orders), the series counterpart of enumerate_partition.
double restricted_series(double x, int n_spins, double rho);

}  // namespace casimir_rect

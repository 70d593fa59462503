#include "casimir_rect/effspin.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "casimir_rect/errors.hpp"
#include "casimir_rect/sigma.hpp"
#include "casimir_rect/weights.hpp"

namespace casimir_rect {

namespace {

constexpr std::uint32_t kBlockBits = 12;

struct BlockSums {
    double z = 0.0;
    double moment = 0.0;  // sum of weight * sum_mu Gamma_mu s_mu
};

std::uint32_t parity_mask(int n, int sign)
{
    std::uint32_t mask = 0;
    for (int mu = 1; mu <= n; ++mu) {
        if (parity(mu) == sign) mask |= 1u << (mu - 1);
    }
    return mask;
}

BlockSums enumerate_blocks(const EffectiveModel& model, double rho, Exec exec)
{
    const int n = model.n_spins;
    if (n < 2 || n > kMaxEnumeratedSpins) throw DomainError("enumerate_partition: n_spins must be in [2, 24]");
    if (!(rho > 0.0)) throw DomainError("enumerate_partition: rho must be positive");
    const std::uint32_t odd = parity_mask(n, 1);
    const std::uint32_t even = parity_mask(n, -1);
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t block = std::uint64_t{1} << kBlockBits;
    const std::size_t n_blocks = static_cast<std::size_t>((total + block - 1) / block);

    auto run_block = [&](std::size_t b) {
        BlockSums sums;
        const std::uint64_t begin = b * block;
        const std::uint64_t end = std::min(total, begin + block);
        int members[kMaxEnumeratedSpins];
        for (std::uint64_t config = begin; config < end; ++config) {
            const auto c = static_cast<std::uint32_t>(config);
            if (std::popcount(c & odd) != std::popcount(c & even)) continue;
            int count = 0;
            double field = 0.0;
            for (int mu = 1; mu <= n; ++mu) {
                if (c & (1u << (mu - 1))) {
                    members[count++] = mu;
                    field += model.moments[static_cast<std::size_t>(mu - 1)];
                }
            }
            double energy = -rho * field;
            for (int i = 0; i < count; ++i) {
                for (int j = i + 1; j < count; ++j) energy += model.coupling(members[i], members[j]);
            }
            const double w = std::exp(energy);
            sums.z += w;
            sums.moment += field * w;
        }
        return sums;
    };
    const auto blocks = map_indexed<BlockSums>(n_blocks, run_block, exec);
    BlockSums total_sums;
    for (const BlockSums& s : blocks) {
        total_sums.z += s.z;
        total_sums.moment += s.moment;
    }
    return total_sums;
}

}  // namespace

EffectiveModel build_model(double x, int n_spins)
{
    if (n_spins < 2) throw DomainError("build_model: n_spins must be >= 2");
    const auto spectrum = cached_spectrum(x, n_spins);
    EffectiveModel model;
    model.x = x;
    model.n_spins = n_spins;
    model.couplings.assign(static_cast<std::size_t>(n_spins) * n_spins, 0.0);
    for (int mu = 1; mu <= n_spins; ++mu) {
        model.moments.push_back(spectrum->zero(mu).gamma);
        model.sigma.push_back(parity(mu));
        for (int nu = 1; nu <= n_spins; ++nu) {
            if (nu == mu) continue;
            const double diff = spectrum->zero(mu).phi_sq - spectrum->zero(nu).phi_sq;
            const double log_ratio = spectrum->weight(mu).log_v + spectrum->weight(nu).log_v - 2.0 * std::log(std::abs(diff));
            model.couplings[static_cast<std::size_t>((mu - 1) * n_spins + (nu - 1))] =
                -parity(mu) * parity(nu) * log_ratio;
        }
    }
    return model;
}

double enumerate_partition(const EffectiveModel& model, double rho, Exec exec)
{
    return enumerate_blocks(model, rho, exec).z;
}

double magnetization(const EffectiveModel& model, double rho, Exec exec)
{
    const BlockSums sums = enumerate_blocks(model, rho, exec);
    return sums.moment / sums.z;
}

double restricted_series(double x, int n_spins, double rho)
{
    if (n_spins < 2 || n_spins > kMaxEnumeratedSpins) throw DomainError("restricted_series: n_spins must be in [2, 24]");
    const auto spectrum = cached_spectrum(x, n_spins);
    double sum = 0.0;
    for (std::uint32_t c = 1; c < (1u << n_spins); ++c) {
        IndexSet s;
        for (int mu = 1; mu <= n_spins; ++mu) {
            if (c & (1u << (mu - 1))) s.push_back(mu);
        }
        if (!is_balanced(s)) continue;
        const SubsetTerm term = amplitude(s, *spectrum);
        sum += std::exp(term.log_a - rho * term.gamma_sum);
    }
    return 1.0 + sum;
}

}  // namespace casimir_rect

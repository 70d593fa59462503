#include "casimir_rect/thermo_constants.hpp"

#include <cmath>
#include <numbers>

#include "casimir_rect/errors.hpp"
#include "casimir_rect/specialfn.hpp"

namespace casimir_rect {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
}  // namespace

double ExpansionResult::term(const std::string& label) const
{
    for (const auto& [name, value] : terms) {
        if (name == label) return value;
    }
    throw DomainError("ExpansionResult: no term labeled " + label);
}

double corner_jump_coefficient() { return 0.75 * kLn2; }

ExpansionResult corner_free_energy(double tau)
{
    if (tau == 0.0 || !std::isfinite(tau)) throw DomainError("corner_free_energy: tau must be finite and non-zero");
    ExpansionResult out;
    out.tau = tau;
    out.terms = {
        {"log", kCornerLogCoefficient * std::log(std::abs(tau))},
        {"constant", -2.0 / kPi * catalan_constant() + 9.0 / 16.0 * kLn2},
        {"jump", corner_jump_coefficient() * (tau > 0.0 ? 1.0 : -1.0)},
    };
    for (const auto& t : out.terms) out.value += t.second;
    return out;
}

ExpansionResult surface_free_energy(double tau)
{
    if (!std::isfinite(tau)) throw DomainError("surface_free_energy: tau must be finite");
    const double abs_tau = std::abs(tau);
    const double tau_log = (tau == 0.0) ? 0.0 : (std::log(abs_tau) - 1.0) / kPi * tau;
    ExpansionResult out;
    out.tau = tau;
    out.terms = {
        {"critical", surface_critical_value()},
        {"abs", 0.5 * abs_tau},
        {"linear", (0.25 - 3.0 * kLn2 / (2.0 * kPi)) * tau + tau_log},
    };
    for (const auto& t : out.terms) out.value += t.second;
    return out;
}

double surface_critical_value()
{
    const double z_c = std::numbers::sqrt2 - 1.0;
    const double bracket = hurwitz_zeta_sderiv_neg1(0.125) + hurwitz_zeta_sderiv_neg1(0.375) -
                           hurwitz_zeta_sderiv_neg1(0.625) - hurwitz_zeta_sderiv_neg1(0.875);
    return -0.75 * std::log(z_c) - 2.0 * bracket;
}

}  // namespace casimir_rect

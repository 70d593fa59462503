#pragma once

#include <string>
#include <utility>
#include <vector>

namespace casimir_rect {

/// Near-critical expansion evaluated term by term at reduced temperature tau.
struct ExpansionResult {
    double tau = 0.0;
    double value = 0.0;
    std::vector<std::pair<std::string, double>> terms;

    double term(const std::string& label) const;
};

/// Coefficients shared with the small-x law of Theta_sc.
inline constexpr double kCornerLogCoefficient = 0.125;
double corner_jump_coefficient();  ///< (3/4) log 2

/// f_c(tau) = (1/8) log|tau| - (2/pi) C + (9/16) log 2 + (3/4) log 2 sign(tau).
/// Terms: "log", "constant", "jump".
ExpansionResult corner_free_energy(double tau);

/// f_s(tau) = f_s(0) + |tau|/2 + (1/4 - 3 log 2/(2 pi) + (log|tau| - 1)/pi) tau.
/// Terms: "critical", "abs", "linear".
ExpansionResult surface_free_energy(double tau);

/// f_s(0) = -(3/4) log z_c - 2 [zeta'(-1,1/8) + zeta'(-1,3/8) - zeta'(-1,5/8) - zeta'(-1,7/8)].
double surface_critical_value();

}  // namespace casimir_rect

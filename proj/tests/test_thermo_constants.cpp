#include "casimir_rect/errors.hpp"
#include "casimir_rect/specialfn.hpp"
#include "casimir_rect/thermo_constants.hpp"
#include "support.hpp"

using namespace casimir_rect;

TEST_CASE("corner free energy")
{
    const double C = 0.91596559417721901, log2 = std::log(2.0);
    const ExpansionResult r = corner_free_energy(1e-3);
    CHECK_NEAR(r.value, 0.125 * std::log(1e-3) - 2 * C / kPi + (9.0 / 16 + 0.75) * log2, 1e-14);
    CHECK_NEAR(r.term("log"), 0.125 * std::log(1e-3), 1e-15);
    CHECK_NEAR(r.term("constant"), -0.19322651899666826, 1e-15);
    CHECK_NEAR(r.term("jump"), 0.75 * log2, 1e-15);
    CHECK(r.tau == 1e-3);
    for (double eps : {1e-2, 1e-5}) {
        CHECK_NEAR(corner_free_energy(eps).value - corner_free_energy(-eps).value, 1.5 * log2, 1e-14);
        CHECK(corner_free_energy(-eps).term("jump") == -corner_free_energy(eps).term("jump"));
    }
    CHECK_NEAR(corner_jump_coefficient(), 0.75 * log2, 1e-16);
    CHECK_THROWS_AS(corner_free_energy(0.0), DomainError);
    CHECK_THROWS_AS(r.term("quadratic"), DomainError);
}

TEST_CASE("surface free energy at criticality")
{
    // mpmath: -(3/4) log(sqrt 2 - 1) - 2 [zeta'(-1,1/8) + zeta'(-1,3/8) - zeta'(-1,5/8) - zeta'(-1,7/8)]
    CHECK_NEAR(surface_critical_value(), 0.18173141698441875, 1e-12);
    CHECK_NEAR(surface_free_energy(0.0).value, surface_critical_value(), 1e-15);

    const double tau = 1e-4;
    const ExpansionResult r = surface_free_energy(tau);
    CHECK_NEAR(r.term("critical"), surface_critical_value(), 1e-16);
    CHECK_NEAR(r.term("abs"), 5e-5, 1e-18);
    CHECK_NEAR(r.term("linear"), (0.25 - 3 * std::log(2.0) / (2 * kPi) + (std::log(tau) - 1) / kPi) * tau, 1e-18);
    CHECK_NEAR(r.value, r.term("critical") + r.term("abs") + r.term("linear"), 1e-16);
}

TEST_CASE("surface free energy cusp")
{
    const double f0 = surface_critical_value();
    // the tau log|tau| and linear terms are odd, so only the |tau|/2 cusp survives
    for (double eps : {1e-2, 1e-4, 1e-6}) {
        const double slope = (surface_free_energy(eps).value + surface_free_energy(-eps).value - 2 * f0) / eps;
        CHECK_NEAR(slope, 1.0, 1e-15 / eps);
    }
}

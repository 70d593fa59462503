#include "casimir_rect/casimir.hpp"
#include "casimir_rect/errors.hpp"
#include "casimir_rect/sigma.hpp"
#include "casimir_rect/specialfn.hpp"
#include "casimir_rect/strip.hpp"
#include "casimir_rect/thermo_constants.hpp"
#include "support.hpp"

using namespace casimir_rect;

namespace {
const double kLog2 = std::log(2.0);
}

TEST_CASE("I1 against direct quadrature")
{
    // mpmath, 30 digits
    CHECK_NEAR(integral_I1(1.0), 0.0015895422636899953, 1e-12);
    CHECK_NEAR(integral_I1(-0.5), 1.0226828837140287, 1e-11);
    CHECK(std::abs(integral_I1(25.0)) < 1e-20);
    CHECK_THROWS_AS(integral_I1(0.0), DomainError);
}

TEST_CASE("I1 near zero")
{
    const double C = catalan_constant();
    auto regular = [C](double x) { return integral_I1(x) + kPi / 24 * std::log(std::abs(x)) + C * (x > 0 ? 1 : -1); };
    // the remainder is O(x log|x|) and tends to the same constant from both sides
    for (double sign : {1.0, -1.0}) CHECK(std::abs(regular(sign * 1e-3) - regular(sign * 1e-4)) < 0.005);
    CHECK(std::abs(regular(1e-5) - regular(-1e-5)) < 1e-4);
    double previous = 1.0;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
        const double gap = std::abs(integral_I1(eps) - integral_I1(-eps) + 2 * C);
        CHECK(gap < previous);
        previous = gap;
    }
    CHECK(previous < 1e-3);
}

TEST_CASE("I2")
{
    const double C = catalan_constant();
    auto regular = [C](double x) {
        return integral_I2(x) + (0.125 - kPi / 24) * std::log(std::abs(x)) - (C - 0.75 * kLog2) * (x > 0 ? 1 : -1);
    };
    for (double sign : {1.0, -1.0}) CHECK(std::abs(regular(sign * 1e-2) - regular(sign * 1e-3)) < 1e-4);
    CHECK(std::abs(regular(1e-4) - regular(-1e-4)) < 1e-5);
    CHECK(std::abs(integral_I2(30.0)) < 1e-6);
    CHECK_THROWS_AS(integral_I2(0.0), DomainError);
    CHECK(psi_cache_stats().panels > 0);
}

TEST_CASE("surface-corner function limits")
{
    CHECK_NEAR(theta_sc(-15.0), -kLog2, 0.05);
    CHECK(std::abs(theta_sc(15.0)) < 1e-3);
    CHECK_NEAR(theta_volume_rho1(0.8), integral_I1(0.8) + integral_I2(0.8), 1e-15);
    CHECK_NEAR(x_theta_sc_prime(0.0), -0.125, 1e-10);
    for (double x : {-2.0, 1.5}) {
        const double h = 1e-3;
        const double fd = (-theta_sc(x + 2 * h) + 8 * theta_sc(x + h) - 8 * theta_sc(x - h) + theta_sc(x - 2 * h)) / (12 * h);
        CHECK_NEAR(x_theta_sc_prime(x), x * fd, 1e-7);
    }
    CHECK_THROWS_AS(theta_sc(0.0), DomainError);
}

TEST_CASE("decomposition of the potential")
{
    for (double x : {-3.0, -0.5, 0.7, 2.0}) {
        for (double rho : {1.0, 1.5, 3.0}) {
            const CasimirSample s = casimir_sample(x, rho);
            CHECK_NEAR(s.theta_total, theta_oo(x) + s.theta_sc / rho + s.Psi_val, 1e-9);
            CHECK_NEAR(s.vartheta_total, vartheta_total(x, rho), 1e-15);
        }
    }
    CHECK_NEAR(theta_total(-1.2, 1e4), theta_oo(-1.2), 1e-3);
    CHECK_THROWS_AS(theta_total(0.0, 1.0), DomainError);
}

TEST_CASE("exchange symmetry of the potential")
{
    for (double x : {-1.0, 0.5}) CHECK_NEAR(theta_total(x, 2.0), 0.25 * theta_total(2 * x, 0.5), 1e-10);
}

TEST_CASE("low-temperature limit")
{
    for (double rho : {0.5, 1.0, 2.0}) CHECK_NEAR(theta_total(-15.0, rho), -kLog2 / rho, 0.05 / rho);
}

TEST_CASE("critical force")
{
    CHECK_NEAR(vartheta_total(0.0, 1.0), 1.0 / 16, 1e-9);
    for (double rho : {0.7, 1.0, 2.0}) CHECK_NEAR(vartheta_total(0.0, rho), kPi / 48 * eisenstein_E2(rho), 1e-10);
    CHECK(vartheta_total(0.0, 0.25) < 0.0);
    CHECK(vartheta_total(0.0, 1.0) > 0.0);
    const double rho0 = find_rho0();
    CHECK_NEAR(rho0, 0.523521700017999, 1e-12);
    CHECK_NEAR(vartheta_total(0.0, rho0), 0.0, 1e-10);
}

TEST_CASE("force branches meet at rho = 1")
{
    for (double x : {-3.0, -1.0, 0.0, 1.0, 3.0}) CHECK_NEAR(vartheta_parallel(x, 1.0), vartheta_total(x, 1.0), 1e-8);
    CHECK_THROWS_AS(vartheta_parallel(0.0, 1.5), DomainError);
}

TEST_CASE("force from the potential")
{
    for (double x : {-2.0, 1.0}) {
        for (double rho : {1.0, 2.0}) {
            const double h = 1e-3;
            auto g = [x](double r) { return r * theta_total(x, r); };
            const double d = (-g(rho + 2 * h) + 8 * g(rho + h) - 8 * g(rho - h) + g(rho - 2 * h)) / (12 * h);
            INFO("x=", x, " rho=", rho);
            CHECK_NEAR(vartheta_total(x, rho), -d, 1e-6);
        }
    }
}

TEST_CASE("Casimir amplitude")
{
    CHECK_NEAR(casimir_amplitude(1.0), 0.25 * -0.26367207024891798, 1e-15);
    CHECK_NEAR(casimir_amplitude(6.0), -kPi * 6.0 / 48, 1e-15);
    for (double rho : {0.6, 1.0, 2.5}) CHECK_NEAR(casimir_amplitude_series(rho), casimir_amplitude(rho), 1e-12);
    CHECK_THROWS_AS(casimir_amplitude(-1.0), DomainError);
}

TEST_CASE("corner coefficients agree with the corner free energy")
{
    CHECK(kCornerLogCoefficient == 0.125);
    CHECK_NEAR(corner_free_energy(-1e-3).term("jump"), -0.75 * kLog2, 1e-15);
}

TEST_CASE("lattice variables")
{
    const double zc = std::sqrt(2.0) - 1;
    const ScalingPoint crit = lattice_to_scaling(zc, 50, 50);
    CHECK_NEAR(crit.x(), 0.0, 1e-13);
    CHECK(crit.rho() == 1.0);
    const ScalingPoint p = lattice_to_scaling(zc * (1 - 1.0 / 200), 200, 100);
    CHECK_NEAR(p.x(), 1.0, 1e-12);
    CHECK(p.rho() == 2.0);
    CHECK_NEAR(lattice_to_scaling(zc * (1 + 1.0 / 40), 7, 40).x(), -2.0, 1e-12);
    CHECK_THROWS_AS(lattice_to_scaling(1.5, 1, 1), DomainError);
}

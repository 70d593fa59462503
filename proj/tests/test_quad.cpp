#include "casimir_rect/errors.hpp"
#include "casimir_rect/quad.hpp"
#include "support.hpp"

using namespace casimir_rect;

TEST_CASE("finite interval")
{
    CHECK_NEAR(integrate_finite([](double) { return 1.0; }, 0.0, 2.0), 2.0, 1e-15);
    CHECK_NEAR(integrate_finite([](double t) { return std::sin(t); }, 0.0, kPi), 2.0, 1e-13);

    // oracle: expand log1p and integrate term by term
    double series = 0.0;
    for (int k = 1; k < 200000; ++k) series += ((k % 2) ? 1.0 : -1.0) / (2.0 * k * k);
    const double v = integrate_finite([](double w) { return std::log1p(std::exp(-2 * w)); }, 0.0, 40.0);
    CHECK_NEAR(v, kPi * kPi / 24, 1e-12);
    CHECK_NEAR(v, series, 1e-10);
}

TEST_CASE("semi-infinite range")
{
    CHECK_NEAR(integrate_semi_infinite([](double t) { return std::exp(-t); }, 0.0), 1.0, 1e-12);
    CHECK_NEAR(integrate_semi_infinite([](double t) { return 1.0 / std::cosh(t); }, 0.0), kPi / 2, 1e-12);
    CHECK_NEAR(integrate_semi_infinite([](double t) { return t * std::exp(-t * t); }, 0.0), 0.5, 1e-12);
}

TEST_CASE("square-root endpoint after substitution")
{
    CHECK_NEAR(integrate_sqrt_singularity([](double s) { return std::exp(-s); }, 0.0), 1.0, 1e-12);
    // int_x^inf e^-t / sqrt(t^2 - x^2) dt = K0(x); with t = sqrt(x^2 + s^2) the integrand is e^-t / t
    const double x = 1.0;
    const double k0 = integrate_sqrt_singularity(
        [x](double s) {
            const double t = std::hypot(x, s);
            return std::exp(-t) / t;
        },
        x);
    CHECK_NEAR(k0, 0.42102443824070833, 1e-12);
}

TEST_CASE("sinh map resolves narrow features and breakpoints")
{
    const double w = 1e-3;
    const double lorentz = integrate_sinh_mapped([w](double s) { return w / (w * w + s * s) * std::exp(-s); }, w);
    // oracle: the same integral split by hand into [0, 1] and [1, inf)
    const double split = integrate_finite([w](double s) { return w / (w * w + s * s) * std::exp(-s); }, 0.0, 1.0,
                                          {1e-13, 1e-15, 60, 1.0}) +
                         integrate_semi_infinite([w](double s) { return w / (w * w + s * s) * std::exp(-s); }, 1.0);
    CHECK_NEAR(lorentz, split, 1e-11);

    SinhMapOptions options;
    options.breakpoints = {2.0};
    const double logsing = integrate_sinh_mapped([](double s) { return std::log(std::abs(s - 2.0)) * std::exp(-s); },
                                                 1.0, {1e-12, 1e-14, 60, 1.0}, options);
    // oracle: mpmath quad with the split at s = 2
    CHECK_NEAR(logsing, 0.022664470769872028, 1e-11);

    options = {};
    options.soften_origin = true;
    CHECK_NEAR(integrate_sinh_mapped([](double s) { return std::log(s) * std::exp(-s); }, 1.0, {}, options),
               -0.57721566490153286, 1e-12);
}

TEST_CASE("tightening the tolerance does not hurt")
{
    const auto f = [](double t) { return std::log1p(t * t) / std::cosh(t); };
    const double exact = 1.2877658607692155877;  // mpmath quad, 30 digits
    QuadratureSpec spec;
    double previous = 1.0;
    for (double rel : {1e-6, 5e-7, 2.5e-7, 1e-9, 5e-10, 1e-12, 5e-13}) {
        spec.rel_tol = rel;
        spec.abs_tol = rel * 1e-2;
        const double err = std::abs(integrate_semi_infinite(f, 0.0, spec) - exact);
        CHECK(err <= std::max(previous, 1e-15));
        previous = std::max(err, 1e-15);
    }
}

TEST_CASE("determinism and validation")
{
    const auto f = [](double t) { return std::exp(-t) * std::sin(3 * t); };
    CHECK(integrate_semi_infinite(f, 0.0) == integrate_semi_infinite(f, 0.0));
    QuadratureSpec bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(integrate_finite(f, 1.0, 0.0), DomainError);
    QuadratureSpec shallow;
    shallow.max_depth = 1;
    CHECK_THROWS_AS(integrate_finite([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, shallow), NumericalError);
}

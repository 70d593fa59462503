#include <iostream>

#include "CLI11.hpp"
#include "casimir_rect/cli.hpp"
#include "casimir_rect/parallel.hpp"

int main(int argc, char** argv)
{
    using namespace casimir_rect;
    configure_threads_from_env();

    CLI::App app{"Casimir scaling functions of the 2D Ising model on an open rectangle"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "csv";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("-o,--output", config.output, "output file (default: standard output)");
    };
    auto add_x = [&](CLI::App* sub) {
        sub->add_option("--x", config.x_values, "x values");
        sub->add_option("--x-min", config.x_min, "grid start");
        sub->add_option("--x-max", config.x_max, "grid end");
        sub->add_option("--steps", config.steps, "number of grid points from x-min to x-max");
    };
    auto add_rho = [&](CLI::App* sub) { sub->add_option("--rho", config.rho_values, "aspect ratios"); };
    auto add_order = [&](CLI::App* sub) { sub->add_option("--order,-N", config.order, "series order N"); };

    auto* zeros = app.add_subcommand("zeros", "zeros of the characteristic polynomial");
    add_x(zeros);
    zeros->add_option("--count", config.count, "number of zeros");

    auto* weights = app.add_subcommand("weights", "weights v_mu(x)");
    add_x(weights);
    weights->add_option("--count", config.count, "number of weights");
    weights->add_option("--rel-tol", config.rel_tol, "relative tolerance of the weight integrals");

    auto* sigma = app.add_subcommand("sigma", "strip residual function by series and determinant");
    add_x(sigma);
    add_rho(sigma);
    add_order(sigma);
    sigma->add_option("--modes", config.modes, "determinant truncation");

    auto* theta = app.add_subcommand("theta-table", "total Casimir potential");
    add_x(theta);
    add_rho(theta);
    add_order(theta);

    auto* vartheta = app.add_subcommand("vartheta-table", "total Casimir force");
    add_x(vartheta);
    add_rho(vartheta);
    add_order(vartheta);

    auto* critical = app.add_subcommand("critical", "closed forms at x = 0");
    add_rho(critical);
    add_order(critical);

    auto* constants = app.add_subcommand("constants", "corner, surface and special constants");
    auto* rho0 = app.add_subcommand("rho0", "aspect ratio where the critical force changes sign");

    auto* effspin = app.add_subcommand("effspin-check", "effective spin model against the series");
    add_x(effspin);
    add_rho(effspin);
    add_order(effspin);
    effspin->add_option("--spins", config.spins, "number of spins (<= 24)");

    for (auto* sub : {zeros, weights, sigma, theta, vartheta, critical, constants, rho0, effspin}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    config.command = app.get_subcommands().front()->get_name();
    config.format = (format == "json") ? OutputFormat::json : OutputFormat::csv;
    return run(config, std::cout, std::cerr);
}

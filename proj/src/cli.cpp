#include "casimir_rect/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "casimir_rect/casimir.hpp"
#include "casimir_rect/effspin.hpp"
#include "casimir_rect/errors.hpp"
#include "casimir_rect/parallel.hpp"
#include "casimir_rect/sigma.hpp"
#include "casimir_rect/specialfn.hpp"
#include "casimir_rect/strip.hpp"
#include "casimir_rect/thermo_constants.hpp"
#include "casimir_rect/weights.hpp"

namespace casimir_rect {

namespace {

std::string render_cell(const Cell& cell)
{
    if (std::holds_alternative<double>(cell)) return render_number(std::get<double>(cell));
    if (std::holds_alternative<long long>(cell)) return std::to_string(std::get<long long>(cell));
    if (std::holds_alternative<std::string>(cell)) return std::get<std::string>(cell);
    return "";
}

nlohmann::ordered_json cell_json(const Cell& cell)
{
    if (std::holds_alternative<double>(cell)) {
        const double v = std::get<double>(cell);
        return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
    }
    if (std::holds_alternative<long long>(cell)) return std::get<long long>(cell);
    if (std::holds_alternative<std::string>(cell)) return std::get<std::string>(cell);
    return nullptr;
}

struct GridPoint {
    double x;
    double rho;
};

std::vector<GridPoint> grid(const RunConfig& config)
{
    std::vector<GridPoint> points;
    for (double rho : config.rho_values) {
        for (double x : config.x_grid()) points.push_back({x, rho});
    }
    return points;
}

// Evaluates row(point) over the x-rho grid, in parallel, keeping grid order.
template <typename RowFn>
void fill_grid(FunctionTable& table, const RunConfig& config, RowFn&& row)
{
    const auto points = grid(config);
    auto rows = map_indexed<std::vector<Cell>>(points.size(), [&](std::size_t i) {
        const GridPoint& p = points[i];
        try {
            return row(p);
        } catch (const NumericalError& e) {
            std::ostringstream msg;
            msg.precision(17);
            msg << e.what() << " (at x=" << p.x << ", rho=" << p.rho << ")";
            throw NumericalError(msg.str());
        }
    });
    for (auto& r : rows) table.add_row(std::move(r));
}

FunctionTable zeros_table(const RunConfig& config)
{
    FunctionTable table{{"mu", "phi", "phi_sq", "gamma"}, {}};
    const auto xs = config.x_grid();
    if (xs.size() != 1) throw DomainError("zeros: exactly one x value is required");
    for (const ZeroRecord& z : find_zeros(config.count, xs.front())) {
        const Cell phi = z.imaginary() ? Cell(render_number(z.phi_abs()) + "i") : Cell(z.phi_abs());
        table.add_row({static_cast<long long>(z.mu), phi, z.phi_sq, z.gamma});
    }
    return table;
}

FunctionTable weights_table(const RunConfig& config)
{
    FunctionTable table{{"x", "mu", "v", "log_v", "method"}, {}};
    QuadratureSpec spec = weight_quad_spec();
    spec.rel_tol = config.rel_tol;
    for (double x : config.x_grid()) {
        const auto records = map_indexed<WeightRecord>(static_cast<std::size_t>(config.count), [&](std::size_t i) {
            return weight_auto(static_cast<int>(i) + 1, x, spec);
        });
        for (const WeightRecord& w : records) {
            table.add_row({x, static_cast<long long>(w.mu), w.v, w.log_v, to_string(w.method)});
        }
    }
    return table;
}

FunctionTable sigma_table(const RunConfig& config)
{
    FunctionTable table{{"x", "rho", "sigma_series", "sigma_det", "Psi", "psi"}, {}};
    fill_grid(table, config, [&](const GridPoint& p) -> std::vector<Cell> {
        const StripSeries series = strip_series(p.x, p.rho, config.order);
        return {p.x,
                p.rho,
                1.0 + series.sigma_minus_one,
                sigma_det(p.x, p.rho, config.modes).value,
                -std::log1p(series.sigma_minus_one) / p.rho,
                series.psi};
    });
    return table;
}

FunctionTable theta_table(const RunConfig& config)
{
    FunctionTable table{{"x", "rho", "theta_total", "note"}, {}};
    fill_grid(table, config, [&](const GridPoint& p) -> std::vector<Cell> {
        if (p.x == 0.0) return {p.x, p.rho, std::monostate{}, std::string("divergent")};
        return {p.x, p.rho, theta_total(p.x, p.rho, config.order), std::string()};
    });
    return table;
}

FunctionTable vartheta_table(const RunConfig& config)
{
    FunctionTable table{{"x", "rho", "vartheta"}, {}};
    fill_grid(table, config, [&](const GridPoint& p) -> std::vector<Cell> {
        return {p.x, p.rho, vartheta_total(p.x, p.rho, config.order)};
    });
    return table;
}

FunctionTable critical_table(const RunConfig& config)
{
    FunctionTable table{{"rho", "sigma_series", "eta_product", "psi", "vartheta", "E2", "casimir_amplitude"}, {}};
    for (double rho : config.rho_values) {
        // the series routes are only defined for rho >= 1/2
        const bool series = rho >= kMinSigmaRho;
        const Cell sigma = series ? Cell(sigma_series(0.0, rho, config.order).value) : Cell();
        const Cell psi = series ? Cell(psi_strip(0.0, rho, config.order)) : Cell();
        table.add_row({rho, sigma, std::exp(-0.25 * log_q_pochhammer(rho)), psi,
                       vartheta_total(0.0, rho, config.order), eisenstein_E2(rho), casimir_amplitude(rho)});
    }
    return table;
}

FunctionTable constants_table(const RunConfig&)
{
    FunctionTable table{{"name", "value"}, {}};
    const ExpansionResult corner = corner_free_energy(1.0);
    table.add_row({std::string("catalan"), catalan_constant()});
    table.add_row({std::string("rho0"), find_rho0()});
    table.add_row({std::string("surface_fs0"), surface_critical_value()});
    table.add_row({std::string("corner_constant"), corner.term("constant")});
    table.add_row({std::string("corner_jump"), corner_jump_coefficient()});
    table.add_row({std::string("theta_oo_0"), theta_oo(0.0)});
    table.add_row({std::string("psi_0_rho1"), psi_strip(0.0, 1.0, 10)});
    table.add_row({std::string("vartheta_0_rho1"), vartheta_total(0.0, 1.0, 10)});
    table.add_row({std::string("weight_v1_xneg1"), weight_v_special_xneg1().v});
    return table;
}

FunctionTable effspin_table(const RunConfig& config)
{
    FunctionTable table{{"x", "rho", "n_spins", "z_eff", "series", "m_eff", "minus_psi"}, {}};
    for (const GridPoint& p : grid(config)) {
        const EffectiveModel model = build_model(p.x, config.spins);
        table.add_row({p.x, p.rho, static_cast<long long>(config.spins), enumerate_partition(model, p.rho),
                       restricted_series(p.x, config.spins, p.rho), magnetization(model, p.rho),
                       -psi_strip(p.x, p.rho, config.order)});
    }
    return table;
}

}  // namespace

void FunctionTable::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size()) throw DomainError("FunctionTable: row width does not match the columns");
    rows.push_back(std::move(row));
}

std::string render_number(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

void emit_table(const FunctionTable& table, OutputFormat format, std::ostream& sink, const nlohmann::ordered_json& meta)
{
    if (format == OutputFormat::csv) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) sink << (i ? "," : "") << table.columns[i];
        sink << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) sink << (i ? "," : "") << render_cell(row[i]);
            sink << '\n';
        }
    } else {
        nlohmann::ordered_json doc;
        doc["columns"] = table.columns;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (const Cell& c : row) r.push_back(cell_json(c));
            doc["rows"].push_back(std::move(r));
        }
        doc["meta"] = meta;
        sink << doc.dump(2) << '\n';
    }
    if (!sink) throw std::runtime_error("emit_table: write failed");
}

const std::vector<std::string>& cli_commands()
{
    static const std::vector<std::string> commands{"zeros",          "weights",  "sigma",     "theta-table",
                                                   "vartheta-table", "critical", "constants", "rho0",
                                                   "effspin-check"};
    return commands;
}

void RunConfig::validate() const
{
    bool known = false;
    for (const auto& c : cli_commands()) known = known || c == command;
    if (!known) throw DomainError("unknown command '" + command + "'");
    if (steps < 0) throw DomainError("--steps must be >= 1");
    if (steps > 0 && !(x_min <= x_max)) throw DomainError("--x-min must not exceed --x-max");
    if (order < 1 || order > 16) throw DomainError("--order must be in [1, 16]");
    if (modes < 1 || modes > 64) throw DomainError("--modes must be in [1, 64]");
    if (count < 1) throw DomainError("--count must be >= 1");
    if (spins < 2 || spins > kMaxEnumeratedSpins) throw DomainError("--spins must be in [2, 24]");
    if (!(rel_tol > 0.0)) throw DomainError("--rel-tol must be positive");
    if (rho_values.empty()) throw DomainError("at least one --rho value is required");
    for (double rho : rho_values) {
        if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("--rho values must be positive");
    }
    for (double x : x_grid()) {
        if (!std::isfinite(x)) throw DomainError("x values must be finite");
    }
    const bool needs_x = command == "zeros" || command == "weights" || command == "sigma" ||
                         command == "theta-table" || command == "vartheta-table" || command == "effspin-check";
    if (needs_x && x_grid().empty()) throw DomainError(command + ": give --x or --x-min/--x-max/--steps");
}

std::vector<double> RunConfig::x_grid() const
{
    if (steps <= 0) return x_values;
    if (steps == 1) return {x_min};
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        // exact endpoints, and an exact 0 when the grid passes through it
        const double n = steps - 1;
        double x = (x_min * (n - i) + x_max * i) / n;
        if (std::abs(x) < 1e-12 * std::max(std::abs(x_min), std::abs(x_max))) x = 0.0;
        xs.push_back(x);
    }
    return xs;
}

nlohmann::ordered_json RunConfig::to_json() const
{
    nlohmann::ordered_json j;
    j["command"] = command;
    if (steps > 0) {
        j["x_min"] = x_min;
        j["x_max"] = x_max;
        j["steps"] = steps;
    } else {
        j["x"] = x_values;
    }
    j["rho"] = rho_values;
    j["order"] = order;
    j["modes"] = modes;
    j["count"] = count;
    j["spins"] = spins;
    j["rel_tol"] = rel_tol;
    return j;
}

FunctionTable build_table(const RunConfig& config)
{
    config.validate();
    const std::string& c = config.command;
    if (c == "zeros") return zeros_table(config);
    if (c == "weights") return weights_table(config);
    if (c == "sigma") return sigma_table(config);
    if (c == "theta-table") return theta_table(config);
    if (c == "vartheta-table") return vartheta_table(config);
    if (c == "critical") return critical_table(config);
    if (c == "constants") return constants_table(config);
    if (c == "effspin-check") return effspin_table(config);
    FunctionTable table{{"rho0"}, {}};
    table.add_row({find_rho0()});
    return table;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        const FunctionTable table = build_table(config);
        std::ofstream file;
        if (!config.output.empty()) {
            file.open(config.output, std::ios::binary);
            if (!file) throw DomainError("cannot open output file " + config.output);
        }
        std::ostream& sink = config.output.empty() ? out : file;
        if (config.command == "rho0" && config.format == OutputFormat::csv) {
            char line[32];
            std::snprintf(line, sizeof line, "%.12f", std::get<double>(table.rows.front().front()));
            sink << line << '\n';
            return 0;
        }
        nlohmann::ordered_json meta;
        meta["tool"] = "casimir_rect";
        meta["version"] = kToolVersion;
        meta["config"] = config.to_json();
        emit_table(table, config.format, sink, meta);
        return 0;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace casimir_rect

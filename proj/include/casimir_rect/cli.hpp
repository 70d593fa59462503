#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace casimir_rect {

inline constexpr const char* kToolVersion = "0.1.0";

/// A blank cell, a number, an integer or free text.
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct FunctionTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

enum class OutputFormat { csv, json };

/// Shortest decimal that parses back to the same double.
std::string render_number(double value);

/// CSV: header line, comma separated, LF endings. JSON: {columns, rows, meta}.
void emit_table(const FunctionTable& table, OutputFormat format, std::ostream& sink,
                const nlohmann::ordered_json& meta = nlohmann::ordered_json::object());

struct RunConfig {
    std::string command;
    std::vector<double> x_values;
    double x_min = 0.0;
    double x_max = 0.0;
    int steps = 0;  ///< > 0 selects the x_min..x_max grid instead of x_values
    std::vector<double> rho_values{1.0};
    int order = 8;
    int modes = 16;
    int count = 4;
    int spins = 8;
    double rel_tol = 1e-12;
    OutputFormat format = OutputFormat::csv;
    std::string output;  ///< empty for standard output

    /// Throws DomainError on inconsistent settings.
    void validate() const;
    std::vector<double> x_grid() const;
    nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& cli_commands();

/// Builds the table for config.command.
FunctionTable build_table(const RunConfig& config);

/// Runs one command: 0 on success, 1 for invalid arguments, 2 for numerical failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace casimir_rect

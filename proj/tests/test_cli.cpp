#include <random>
#include <sstream>

#include "casimir_rect/cli.hpp"
#include "casimir_rect/errors.hpp"
#include "support.hpp"

using namespace casimir_rect;

namespace {

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string run_to_string(const RunConfig& config, int expected_code = 0)
{
    std::ostringstream out, err;
    CHECK(run(config, out, err) == expected_code);
    return out.str();
}

}  // namespace

TEST_CASE("CSV layout")
{
    FunctionTable empty{{"a", "b"}, {}};
    std::ostringstream s1;
    emit_table(empty, OutputFormat::csv, s1);
    CHECK(s1.str() == "a,b\n");

    FunctionTable one{{"v"}, {}};
    one.add_row({0.25});
    std::ostringstream s2;
    emit_table(one, OutputFormat::csv, s2);
    CHECK(s2.str() == "v\n0.25\n");

    FunctionTable mixed{{"n", "s", "blank"}, {}};
    mixed.add_row({7LL, std::string("x"), std::monostate{}});
    std::ostringstream s3;
    emit_table(mixed, OutputFormat::csv, s3);
    CHECK(s3.str() == "n,s,blank\n7,x,\n");
    CHECK_THROWS_AS(mixed.add_row({1.0}), DomainError);
}

TEST_CASE("numbers round-trip")
{
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> exponent(-300, 300);
    for (int i = 0; i < 2000; ++i) {
        const double v = std::ldexp(mantissa(rng), exponent(rng));
        CHECK(std::stod(render_number(v)) == v);
    }
    CHECK(render_number(0.1) == "0.10000000000000001");
}

TEST_CASE("JSON layout")
{
    FunctionTable t{{"x", "note"}, {}};
    t.add_row({1.5, std::string("ok")});
    t.add_row({std::monostate{}, std::string("divergent")});
    std::ostringstream s;
    emit_table(t, OutputFormat::json, s, {{"tool", "casimir_rect"}});
    const auto doc = nlohmann::ordered_json::parse(s.str());
    CHECK(doc["columns"] == nlohmann::ordered_json({"x", "note"}));
    CHECK(doc["rows"][0][0].get<double>() == 1.5);
    CHECK(doc["rows"][1][0].is_null());
    CHECK(doc["meta"]["tool"] == "casimir_rect");
}

TEST_CASE("zeros command")
{
    RunConfig c;
    c.command = "zeros";
    c.x_values = {-4.0};
    c.count = 4;
    const auto out = lines(run_to_string(c));
    REQUIRE(out.size() == 5);
    CHECK(out[0] == "mu,phi,phi_sq,gamma");
    CHECK(out[1].rfind("1,3.997302692", 0) == 0);
    const auto phi = out[1].substr(2, out[1].find(',', 2) - 2);
    CHECK(phi.back() == 'i');
    CHECK(out[1].find(",-15.97") != std::string::npos);
}

TEST_CASE("rho0 command")
{
    RunConfig c;
    c.command = "rho0";
    CHECK(run_to_string(c) == "0.523521700018\n");
}

TEST_CASE("theta-table marks the divergent row")
{
    RunConfig c;
    c.command = "theta-table";
    c.x_min = -1.0;
    c.x_max = 1.0;
    c.steps = 5;
    const auto out = lines(run_to_string(c));
    REQUIRE(out.size() == 6);
    CHECK(out[0] == "x,rho,theta_total,note");
    CHECK(out[3] == "0,1,,divergent");
}

TEST_CASE("CSV and JSON carry the same numbers")
{
    RunConfig c;
    c.command = "vartheta-table";
    c.x_values = {-2.0, 0.0, 1.5};
    c.rho_values = {0.7, 1.0};
    const auto csv = lines(run_to_string(c));
    c.format = OutputFormat::json;
    const std::string json_text = run_to_string(c);
    CHECK(json_text == run_to_string(c));
    const auto doc = nlohmann::ordered_json::parse(json_text);
    CHECK(csv[0] == "x,rho,vartheta");
    REQUIRE(doc["rows"].size() + 1 == csv.size());
    for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
        std::istringstream row(csv[i + 1]);
        for (std::size_t j = 0; j < 3; ++j) {
            std::string cell;
            std::getline(row, cell, ',');
            CHECK(std::stod(cell) == doc["rows"][i][j].get<double>());
        }
    }
    CHECK(doc["meta"]["version"] == kToolVersion);
    CHECK(doc["meta"]["config"]["command"] == "vartheta-table");
}

TEST_CASE("grid construction")
{
    RunConfig c;
    c.command = "sigma";
    c.x_min = -15.0;
    c.x_max = 15.0;
    c.steps = 301;
    const auto xs = c.x_grid();
    REQUIRE(xs.size() == 301);
    CHECK(xs.front() == -15.0);
    CHECK(xs.back() == 15.0);
    CHECK(xs[150] == 0.0);
    c.steps = 0;
    c.x_values = {0.5};
    CHECK(c.x_grid() == std::vector<double>{0.5});
}

TEST_CASE("argument errors exit with 1")
{
    RunConfig c;
    c.command = "theta-table";
    std::ostringstream out, err;
    CHECK(run(c, out, err) == 1);
    CHECK(err.str().find("error") != std::string::npos);

    c.x_values = {1.0};
    c.rho_values = {-1.0};
    CHECK(run(c, out, err) == 1);

    RunConfig unknown;
    unknown.command = "plot";
    CHECK(run(unknown, out, err) == 1);
    CHECK(cli_commands().size() == 9);
}

TEST_CASE("other commands produce tables")
{
    RunConfig c;
    c.command = "constants";
    const auto constants = lines(run_to_string(c));
    CHECK(constants[0] == "name,value");
    CHECK(constants.size() > 5);

    c.command = "effspin-check";
    c.x_values = {0.0};
    c.spins = 8;
    const auto eff = build_table(c);
    REQUIRE(eff.rows.size() == 1);
    CHECK_NEAR(std::get<double>(eff.rows[0][3]), std::get<double>(eff.rows[0][4]), 1e-12);

    c.command = "critical";
    c.rho_values = {0.4, 1.0};
    const auto crit = build_table(c);
    CHECK(std::holds_alternative<std::monostate>(crit.rows[0][1]));
    CHECK_NEAR(std::get<double>(crit.rows[1][4]), 0.0625, 1e-9);

    c.command = "weights";
    c.x_values = {0.0, 1.0};
    c.count = 3;
    CHECK(build_table(c).rows.size() == 6);
}

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lah/cli.hpp"

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun result;
    result.code = lah::run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> cells_of(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
    // a trailing empty cell is dropped by getline; pad so indexing is uniform
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("table: csv layout, row count and a spot value") {
    const CliRun r = run({"table", "--n-max", "4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 15);  // header + 10 entries + 4 totals
    CHECK(lines[0] == "n,k,value");
    CHECK(lines[1] == "1,1,1");
    CHECK(lines[2] == "1,total,1");
    bool found = false;
    for (const auto& line : lines) found = found || line == "4,2,36";
    CHECK(found);
}

TEST_CASE("table: json carries exact digits as strings") {
    const CliRun r = run({"table", "--n-max", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["n_max"] == 3);
    CHECK(j["totals"] == nlohmann::json({"1", "3", "13"}));
    CHECK(j["rows"][2]["values"] == nlohmann::json({"6", "6", "1"}));
    CHECK(j["rows"][2]["total"] == "13");
}

TEST_CASE("table: text rows name the row and the total") {
    const CliRun r = run({"table", "--n-max", "4"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[3] == "n=4: 24 36 12 1 | total 73");
}

TEST_CASE("table: out-of-range sizes are usage errors") {
    const CliRun huge = run({"table", "--n-max", "501"});
    CHECK(huge.code == 1);
    CHECK(contains(huge.err, "500"));
    const CliRun zero = run({"table", "--n-max", "0"});
    CHECK(zero.code == 1);
}

TEST_CASE("bad invocations exit with the usage code") {
    CHECK(run({"table", "--bogus"}).code == 1);
    CHECK(run({"table", "--format", "yaml"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"no-such-command"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("series: exact rational coefficients in csv") {
    const CliRun r = run({"series", "--k", "2", "--order", "6", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 8);  // header + orders 0..6
    CHECK(lines[0] == "n,coefficient");
    CHECK(lines[1] == "0,0");
    CHECK(lines[3] == "2,1/2");
    CHECK(lines[4] == "3,1");
    CHECK(lines[5] == "4,3/2");
}

TEST_CASE("series: alternating variant flips alternate signs") {
    const CliRun r =
        run({"series", "--alternating", "--k", "2", "--order", "6", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines[3] == "2,1/2");
    CHECK(lines[4] == "3,-1");
    CHECK(lines[5] == "4,3/2");
}

TEST_CASE("series: degenerate parameters are usage errors") {
    CHECK(run({"series", "--k", "3", "--order", "2"}).code == 1);
    CHECK(run({"series", "--k", "0", "--order", "5"}).code == 1);
    CHECK(run({"series", "--k", "1", "--order", "600"}).code == 1);
}

TEST_CASE("verify: a restricted grid passes end to end") {
    const CliRun r = run({"verify", "--n-max", "2", "--grid-x", "0.5", "1", "--grid-z", "1",
                          "--grid-k", "1", "2", "--format", "json"});
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "verify");
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["total"] == j["summary"]["passed"]);
    CHECK(j["checks"].is_array());
    CHECK(j["checks"].size() == j["summary"]["total"]);
    // both exact and quadrature-backed rows are present
    bool saw_exact = false;
    bool saw_quadrature = false;
    for (const auto& check : j["checks"]) {
        if (check["exact"] == true) saw_exact = true;
        if (!check["quadrature"].is_null()) saw_quadrature = true;
    }
    CHECK(saw_exact);
    CHECK(saw_quadrature);
}

TEST_CASE("verify: reruns are byte-identical") {
    const std::vector<std::string> args{"verify", "--n-max",  "1", "--grid-x", "1",
                                        "--grid-z", "1", "--grid-k", "1", "--format", "csv"};
    const CliRun a = run(args);
    const CliRun b = run(args);
    CHECK(a.code == 0);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
}

TEST_CASE("verify: csv and json renderings carry identical numbers") {
    const std::vector<std::string> base{"verify", "--n-max", "1", "--grid-x", "1",
                                        "--grid-z", "1", "--grid-k", "1"};
    std::vector<std::string> csv_args = base;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    std::vector<std::string> json_args = base;
    json_args.insert(json_args.end(), {"--format", "json"});
    const CliRun csv = run(csv_args);
    const CliRun json = run(json_args);
    REQUIRE(csv.code == 0);
    REQUIRE(json.code == 0);

    // pick the k = 5 calibration row out of both renderings
    std::vector<std::string> row;
    for (const auto& line : lines_of(csv.out)) {
        const auto cells = cells_of(line);
        if (cells.size() >= 12 && cells[0] == "gamma_integral" && cells[1] == "k=5") row = cells;
    }
    REQUIRE(!row.empty());

    const nlohmann::json j = nlohmann::json::parse(json.out);
    bool matched = false;
    for (const auto& check : j["checks"]) {
        if (check["id"] != "gamma_integral" || check["parameters"]["k"] != 5) continue;
        matched = true;
        // %.17g round-trips doubles exactly, so the parsed CSV cells must
        // reproduce the JSON doubles bit for bit
        CHECK(std::stod(row[4]) == check["lhs"].get<double>());
        CHECK(std::stod(row[5]) == check["rhs"].get<double>());
        CHECK(std::stod(row[8]) == check["quadrature"]["value"].get<double>());
        CHECK(std::stod(row[10]) == check["quadrature"]["truncation_point"].get<double>());
        CHECK(std::stoll(row[11]) == check["quadrature"]["evaluations"].get<long long>());
    }
    CHECK(matched);
}

TEST_CASE("verify: an unreachable tolerance fails with diagnostics, not a crash") {
    const CliRun r = run({"verify", "--tol", "1e-18", "--n-max", "1", "--grid-x", "2",
                          "--grid-z", "10", "--grid-k", "0", "--format", "json"});
    CHECK(r.code == 2);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["failed"].get<long long>() > 0);
    bool saw_note = false;
    for (const auto& check : j["checks"]) {
        if (check["passed"] == false && contains(check["note"].get<std::string>(), "tolerance")) {
            saw_note = true;
        }
    }
    CHECK(saw_note);
}

TEST_CASE("verify: invalid grids and tolerances are usage errors") {
    CHECK(run({"verify", "--tol", "0"}).code == 1);
    CHECK(run({"verify", "--tol", "-1e-9"}).code == 1);
    CHECK(run({"verify", "--n-max", "0"}).code == 1);
    CHECK(run({"verify", "--grid-x", "0"}).code == 1);
    CHECK(run({"verify", "--grid-z", "-2"}).code == 1);
}

TEST_CASE("--out writes the rendering to a file") {
    const std::string path = "cli_out_test.csv";
    const CliRun r = run({"table", "--n-max", "3", "--format", "csv", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    REQUIRE(file.good());
    std::string first;
    std::getline(file, first);
    CHECK(first == "n,k,value");
    file.close();
    std::remove(path.c_str());
}

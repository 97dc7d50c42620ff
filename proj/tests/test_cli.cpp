// End-to-end checks of the permspec binary named by PERMSPEC_BIN: output
// schemas, exit codes, and thread-count independence.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const char* bin = std::getenv("PERMSPEC_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = env_prefix + "\"" + bin + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("gap-series emits the exact k = 1 coefficients") {
    RunResult r = run_cli("gap-series --k 1 --order 6");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["k"] == 1);
    const char* expected[] = {"1", "1", "1/4", "1/36", "1/576"};
    for (int m = 0; m <= 4; ++m) {
        CHECK(j["coeffs"][m]["m"] == m);
        CHECK(j["coeffs"][m]["value"] == expected[m]);
        CHECK(j["coeffs"][m]["err"] == "0");
        CHECK(j["coeffs"][m]["exact"] == true);
    }
}

TEST_CASE("gap-series evaluation reaches the Bessel value") {
    RunResult r = run_cli("gap-series --k 1 --order 12 --eval 1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    std::string v = j["eval"]["value"];
    CHECK(v.substr(0, 18) == "0.2238907791412356");
}

TEST_CASE("spectrum CSV schema with exact rational rows") {
    RunResult r = run_cli("spectrum --n 6 --k 2 --alpha 0 --T 1 --reps 1 --seed 0");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() >= 1);
    CHECK(lines[0] == "replicate,position,position_err,multiplicity,flag");
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i]);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        REQUIRE(fields.size() == 5);
        CHECK(fields[0] == "0");
        CHECK(fields[2] == "0");
        CHECK(fields[4] == "0");
    }
}

TEST_CASE("pmf enumerates every partition") {
    RunResult r = run_cli("pmf --n 4");
    REQUIRE(r.exit_code == 0);
    CHECK(lines_of(r.out).size() == 5);
    for (const auto& line : lines_of(r.out)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.contains("cycles"));
        CHECK(j.contains("pmf"));
    }
}

TEST_CASE("sample emits one JSON row per replicate") {
    RunResult r = run_cli("sample --n 5 --theta 1/2 --reps 4 --seed 9");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    for (int i = 0; i < 4; ++i) {
        auto j = nlohmann::json::parse(lines[i]);
        CHECK(j["replicate"] == i);
        CHECK(j["n"] == 5);
    }
}

TEST_CASE("gap-mc reports estimate, error, and bias fields") {
    RunResult r = run_cli("gap-mc --k 1 --y2 0.25 --reps 2000 --seed 1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    double est = j["estimate"];
    CHECK(est > 0.70);
    CHECK(est < 0.85);
    CHECK(j["std_error"] > 0.0);
    CHECK(j["reps"] == 2000);
}

TEST_CASE("phi matches the closed form") {
    RunResult r = run_cli("phi --theta 1 --x 2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["phi"] == 1.25);
}

TEST_CASE("discrepancy reads stdin") {
    const char* bin = std::getenv("PERMSPEC_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string("printf '0\\n0.25\\n0.5\\n0.75\\n' | \"") + bin +
                      "\" discrepancy 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["n"] == 4);
    CHECK(j["star_discrepancy"] == 0.25);
}

TEST_CASE("converge reports one row per size") {
    RunResult r = run_cli("converge --n 10,20 --alpha golden --T 1 --reps 300 --seed 4");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["n"] == 10);
    CHECK(j["rows"][1]["n"] == 20);
    for (const auto& row : j["rows"]) {
        double tv = row["tv"];
        CHECK(tv >= 0.0);
        CHECK(tv <= 1.0);
    }
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("spectrum --n 4 --alpha 3/0").exit_code == 2);
    CHECK(run_cli("spectrum --alpha 0").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("pmf --n 3 --theta 0").exit_code == 2);
    CHECK(run_cli("pmf --n 3 --theta -1").exit_code == 2);
    CHECK(run_cli("limit --kind rat:0").exit_code == 2);
    CHECK(run_cli("gap-series --k 1 --order 4 --eval 1.5").exit_code == 2);
}

TEST_CASE("precision and truncation failures exit with code 3") {
    CHECK(run_cli("gap-mc --k 1 --y2 1 --bias-tol 1e-9 --reps 10").exit_code == 3);
}

TEST_CASE("help and version exit cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("--version").exit_code == 0);
    CHECK(run_cli("gap-series --help").exit_code == 0);
}

TEST_CASE("stdout is byte-identical across thread counts") {
    const std::string args = "limit --k 2 --kind irr --window-lo 0 --window-hi 2 --reps 600 --seed 11";
    RunResult one = run_cli(args, "PERMSPEC_THREADS=1 ");
    RunResult four = run_cli(args, "PERMSPEC_THREADS=4 ");
    REQUIRE(one.exit_code == 0);
    REQUIRE(four.exit_code == 0);
    CHECK(one.out == four.out);

    const std::string gargs = "gap-mc --k 2 --y2 0.5 --reps 4096 --seed 12";
    RunResult g1 = run_cli(gargs, "PERMSPEC_THREADS=1 ");
    RunResult g3 = run_cli(gargs, "PERMSPEC_THREADS=3 ");
    CHECK(g1.out == g3.out);
}

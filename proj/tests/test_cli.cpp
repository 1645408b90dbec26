#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string g_cli;  // path to the sphdyn binary, from argv[1]

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    const std::string cmd = g_cli + " " + args + " > " + out_path + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_CASE("knorm on a family spec") {
    const RunResult r = run("knorm --family power:d=2");
    REQUIRE(r.exit_code == 0);
    const auto j = parse(r.out);
    CHECK(std::abs(j["value"].get<double>() - 2.0) < 1e-6);
    CHECK(j.contains("grid_size"));
    CHECK(j.contains("config"));
    CHECK(j["config"]["family"] == "power:d=2");
}

TEST_CASE("chain-report values and config echo") {
    const RunResult r =
        run("chain-report --family lattes4 --n-max 3 --m-max 2 --paths 1000 --seed 5");
    REQUIRE(r.exit_code == 0);
    const auto j = parse(r.out);
    CHECK(std::abs(j["chi_a"]["value"].get<double>() - 0.6931471805599453) < 0.03);
    CHECK(j["k_inf_lower"].get<double>() >= 1.3862943 - 1e-6);
    CHECK(j["chain_ok"].get<bool>());
    CHECK(j["config"]["paths"] == 1000);
    CHECK(j["config"]["seed"] == 5);
}

TEST_CASE("map JSON input") {
    {
        std::ofstream f("cli_map_ok.json");
        f << R"({"num": [[0,0],[0,0],[1,0]], "den": [[1,0]]})";
    }
    const RunResult r = run("knorm --map cli_map_ok.json");
    REQUIRE(r.exit_code == 0);
    CHECK(std::abs(parse(r.out)["value"].get<double>() - 2.0) < 1e-6);
}

TEST_CASE("degenerate map exits 1 with a diagnostic") {
    {
        std::ofstream f("cli_map_bad.json");
        f << R"({"num": [[0,0],[1,0]], "den": [[0,0],[1,0],[1,0]]})";
    }
    const RunResult r = run("knorm --map cli_map_bad.json");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("degenerate map") != std::string::npos);
    const auto j = parse(r.out);
    CHECK(j.contains("error"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("knorm --no-such-flag").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("knorm --family power:d=2 --map x.json").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("missing map file exits 1") {
    const RunResult r = run("knorm --map does_not_exist.json");
    CHECK(r.exit_code == 1);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::string cmd = "chiavg --family random:d=3:seed=9 --paths 500 --seed 2";
    const RunResult a = run(cmd);
    const RunResult b = run(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    const RunResult c = run(cmd + " --workers 1");
    const RunResult d = run(cmd + " --workers 4");
    // Same numbers regardless of parallelism (config echo differs).
    const auto jc = parse(c.out);
    const auto jd = parse(d.out);
    CHECK(jc["value"] == jd["value"]);
    CHECK(jc["stderr"] == jd["stderr"]);
}

TEST_CASE("theorem1 growth table as csv") {
    const RunResult r = run("theorem1 --n-max 1 --format csv --grid 2000");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("n,degree,k,ratio,phi", 0) == 0);
    // One header line plus one data row.
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
}

TEST_CASE("cycles census output") {
    const RunResult r = run("cycles --family power:d=2 --m 2");
    REQUIRE(r.exit_code == 0);
    const auto j = parse(r.out);
    REQUIRE(j["cycles"].is_array());
    CHECK(j["cycles"].size() == 4);
    // Superattracting exponents serialize as null.
    bool saw_null = false;
    for (const auto& c : j["cycles"]) {
        if (c["exponent"].is_null()) saw_null = true;
    }
    CHECK(saw_null);
}

TEST_CASE("output file writing") {
    const RunResult r = run("knorm --family power:d=2 --out cli_out.json");
    REQUIRE(r.exit_code == 0);
    std::ifstream in("cli_out.json");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(std::abs(parse(ss.str())["value"].get<double>() - 2.0) < 1e-6);
}

int main(int argc, char** argv) {
    g_cli = (argc > 1 && argv[1][0] != '-') ? argv[1] : "./sphdyn";
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}

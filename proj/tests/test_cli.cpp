#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("BHDUAL_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
        out.append(buf.data(), got);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("parse subcommand") {
    auto r = run_cli("--output json parse \"x1^2*x2 + x2^2\"");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["det"] == 4);
    CHECK(j["matrix"]["E"] == json::parse("[[2,1],[0,2]]"));
    CHECK(j["weights"]["weights"] == json::parse("[\"1/4\",\"1/2\"]"));
}

TEST_CASE("parse accepts matrix JSON input") {
    auto r = run_cli("--output json parse '{\"n\": 2, \"E\": [[2,1],[0,2]]}'");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["polynomial"] == "x1^2*x2 + x2^2");
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli("parse \"x1^2*x2^2 + x1*x2\"").exit_code == 2); // singular
    CHECK(run_cli("parse \"x1^3 + x1^3\"").exit_code == 2);       // duplicate
    CHECK(run_cli("parse \"x1^2 +\"").exit_code == 2);            // syntax
    CHECK(run_cli("verify \"x1^2 + x2^2\" --subgroup 1/3,0").exit_code == 2);
}

TEST_CASE("cap violations exit with code 3") {
    CHECK(run_cli("--group-cap 3 group \"x1^2 + x2^2\"").exit_code == 3);
    CHECK(run_cli("--subgroup-cap 2 subgroups \"x1^2 + x2^2\"").exit_code == 3);
}

TEST_CASE("group subcommand") {
    auto r = run_cli("--output json group \"x1^2*x2 + x2^2\"");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["d"] == 4);
    CHECK(j["invariant_factors"] == json::parse("[4]"));
}

TEST_CASE("subgroups subcommand lists the lattice") {
    auto r = run_cli("--output json subgroups \"x1^2 + x2^2\"");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output).size() == 5);
}

TEST_CASE("dual subcommand") {
    auto r = run_cli("--output json dual \"x1^2*x2 + x2^2\" --subgroup 0,0");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["f_dual"]["polynomial"] == "x1^2 + x1*x2^2");
    CHECK(j["subgroup_dual"]["order"] == 4);
}

TEST_CASE("euler subcommand with both methods") {
    auto r = run_cli("--output json euler \"x1^2 + x2^2\" --method both");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.output);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["chi_orb"] == 3);
    CHECK(j[1]["chi_orb"] == 3);
    CHECK(j[0]["chi_reduced"] == -1);
}

TEST_CASE("verify subcommand and exit code 0 on success") {
    auto r = run_cli("--output json verify \"x1^3\"");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["chi_reduced_f"] == -2);
    CHECK(j["chi_reduced_dual"] == 2);
    CHECK(j["sign"] == -1);
    CHECK(j["theorem_holds"] == true);
}

TEST_CASE("corpus subcommand emits JSON lines and a summary") {
    auto r = run_cli("--output json corpus --seed 5 --count 4 --verify");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string line;
    int lines = 0;
    json last;
    while (std::getline(in, line)) {
        last = json::parse(line); // every line is standalone JSON
        CHECK(last["schema"] == 1);
        ++lines;
    }
    CHECK(lines == 5);
    CHECK(last["summary"]["failures"] == 0);
}

TEST_CASE("identical argv and seed give byte-identical output") {
    auto a = run_cli("--output json corpus --seed 17 --count 6 --mode sparse --verify");
    auto b = run_cli("--output json corpus --seed 17 --count 6 --mode sparse --verify");
    CHECK(a.output == b.output);
    CHECK(a.output != run_cli("--output json corpus --seed 18 --count 6 --mode sparse").output);

    auto v1 = run_cli("--output json verify \"x1^2*x2 + x2^2*x3 + x3^3\"");
    auto v2 = run_cli("--output json verify \"x1^2*x2 + x2^2*x3 + x3^3\"");
    CHECK(v1.output == v2.output);
}

TEST_CASE("environment variables set caps, flags win") {
    const char* bin = std::getenv("BHDUAL_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = "BHDUAL_GROUP_CAP=3 " + std::string(bin) +
                      " group \"x1^2 + x2^2\" >/dev/null 2>&1; echo $?";
    FILE* p = popen(cmd.c_str(), "r");
    char buf[16] = {};
    REQUIRE(fgets(buf, sizeof buf, p) != nullptr);
    pclose(p);
    CHECK(std::string(buf) == "3\n");

    cmd = "BHDUAL_GROUP_CAP=3 " + std::string(bin) +
          " --group-cap 100 group \"x1^2 + x2^2\" >/dev/null 2>&1; echo $?";
    p = popen(cmd.c_str(), "r");
    REQUIRE(fgets(buf, sizeof buf, p) != nullptr);
    pclose(p);
    CHECK(std::string(buf) == "0\n");
}

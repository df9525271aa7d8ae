// Drives the installed CLI binary through its documented contract:
// commands, formats, --out, and the 0/1/2 exit-code convention.

#include "torusgrowth/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef TORUS_GROWTH_CLI_PATH
#error "TORUS_GROWTH_CLI_PATH must point at the torus-growth binary"
#endif

namespace {

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string command = std::string(TORUS_GROWTH_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

nlohmann::json run_json(const std::string& args, int expected_exit = 0) {
    CliResult result = run_cli(args + " --format json");
    REQUIRE(result.exit_code == expected_exit);
    return nlohmann::json::parse(result.output);
}

}  // namespace

TEST_CASE("series command text output") {
    CliResult result = run_cli("series --p 2 --q 2 --terms 4");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("a_n = 1 6 12 18 24") != std::string::npos);
    CHECK(result.output.find("num = [\"1\",\"4\",\"1\"]") != std::string::npos);
    CHECK(result.output.find("den = [\"1\",\"-2\",\"1\"]") != std::string::npos);
}

TEST_CASE("series command json output and oracle agreement") {
    auto doc = run_json("series --p 2 --q 3 --terms 12 --oracle both");
    CHECK(doc["series"].size() == 13);
    CHECK(doc["series"][1] == "6");
    CHECK(doc["series"] == doc["bfs"]);
    CHECK(doc["series"] == doc["grammar"]);
    CHECK(doc["match"] == true);

    auto tiny = run_json("series --p 3 --q 5 --terms 0");
    REQUIRE(tiny["series"].size() == 1);
    CHECK(tiny["series"][0] == "1");
}

TEST_CASE("series command csv output") {
    CliResult result = run_cli("series --p 2 --q 2 --terms 3 --format csv");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "n,a_n\n0,1\n1,6\n2,12\n3,18\n");
}

TEST_CASE("rate command") {
    auto flat = run_json("rate --p 2 --q 2");
    CHECK(flat["omega"].get<double>() == 1.0);

    auto trefoil = run_json("rate --p 2 --q 3");
    CHECK(std::abs(trefoil["omega"].get<double>() - 1.4142135624) < 1e-9);
    CHECK(trefoil["lemma_gcd"] == 2);

    auto cube = run_json("rate --p 3 --q 3");
    CHECK(std::abs(cube["omega"].get<double>() - 2.0) < 1e-9);
}

TEST_CASE("perron command and byte-identical re-serialization") {
    CliResult result = run_cli("perron --p 2 --q 4 --format json");
    REQUIRE(result.exit_code == 0);
    std::string body = result.output;
    while (!body.empty() && body.back() == '\n') body.pop_back();

    auto parsed = nlohmann::json::parse(body);
    torusgrowth::PerronReport rebuilt;
    rebuilt.p = parsed["p"].get<int>();
    rebuilt.q = parsed["q"].get<int>();
    rebuilt.r0 = parsed["r0"].get<double>();
    rebuilt.omega = parsed["omega"].get<double>();
    rebuilt.lemma_gcd = parsed["lemma_gcd"].get<int>();
    rebuilt.dominance_margin = parsed["dominance_margin"].get<double>();
    rebuilt.verdict = torusgrowth::PerronVerdict::perron_dominant;
    REQUIRE(parsed["verdict"] == "PERRON_DOMINANT");
    CHECK(torusgrowth::to_json(rebuilt) == body);
}

TEST_CASE("perron-scan command") {
    auto small = run_json("perron-scan --max 2");
    REQUIRE(small.is_array());
    REQUIRE(small.size() == 1);
    CHECK(small[0]["verdict"] == "NOT_APPLICABLE_2_2");

    auto scan = run_json("perron-scan --max 4");
    REQUIRE(scan.size() == 6);
    for (const auto& report : scan) {
        if (report["p"] == 2 && report["q"] == 3) CHECK(report["verdict"] == "EQUAL_MODULUS_DETECTED");
        if (report["lemma_gcd"] == 1) CHECK(report["verdict"] == "PERRON_DOMINANT");
    }
}

TEST_CASE("perron-scan writes the JSON array to --out") {
    std::string path = "cli_scan_output.json";
    CliResult result = run_cli("perron-scan --max 3 --format json --out " + path);
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto parsed = nlohmann::json::parse(buffer.str());
    CHECK(parsed.size() == 3);
    std::remove(path.c_str());
}

TEST_CASE("verify command") {
    auto record = run_json("verify --p 4 --q 6 --terms 8");
    CHECK(record["status"] == "OK");
    CHECK(record["terms_checked"] == 8);
    CHECK(!record.contains("first_mismatch_index"));

    auto odd = run_json("verify --p 3 --q 3 --terms 10");
    CHECK(odd["status"] == "OK");
    bool has_amalgam = false;
    for (const auto& route : odd["routes_compared"]) has_amalgam = has_amalgam || route == "amalgam";
    CHECK(has_amalgam);
}

TEST_CASE("general command") {
    auto single = run_json("general --list 3 --terms 6");
    CHECK(single["num"] == nlohmann::json::parse(R"(["1","3","2"])"));
    CHECK(single["den"] == nlohmann::json::parse(R"(["1","-1"])"));
    CHECK(single["series"][1] == "4");

    auto pair = run_json("general --list 3,5 --terms 6");
    auto series = run_json("series --p 3 --q 5 --terms 6");
    CHECK(pair["num"] == series["num"]);
    CHECK(pair["den"] == series["den"]);
    CHECK(pair["series"] == series["series"]);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("series --p 1 --q 3").exit_code == 2);
    CHECK(run_cli("verify --p 1 --q 3").exit_code == 2);
    CHECK(run_cli("general --list 3,4").exit_code == 2);
    CHECK(run_cli("general --list 1").exit_code == 2);
    CHECK(run_cli("series --p 2 --q 3 --terms -4").exit_code == 2);
    CHECK(run_cli("series --p 2 --q 3 --oracle sorcery").exit_code == 2);
    CHECK(run_cli("rate --p 2 --q 3 --format csv").exit_code == 2);
    CHECK(run_cli("perron-scan --max 1").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

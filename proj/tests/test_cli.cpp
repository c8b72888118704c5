#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <regex>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GRAPHLINES_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
    return std::string(GRAPHLINES_FIXTURE_DIR) + "/" + name;
}

std::string without_duration(const std::string& text) {
    return std::regex_replace(text, std::regex("\"duration_ms\": [0-9]+"), "\"duration_ms\": X");
}

}  // namespace

TEST_CASE("analyze subcommand") {
    const auto res = run_cli("analyze " + fixture("w6.g6"));
    CHECK(res.exit_code == 0);
    const json rep = json::parse(res.output);
    CHECK(rep["results"][0]["classification"]["distinct_lines"] == 15);
    CHECK(rep["results"][0]["classification"]["geometric_dominant"] == true);
}

TEST_CASE("disconnected input exits nonzero with a diagnostic") {
    const auto res = run_cli("analyze " + fixture("2k2.g6"));
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("disconnected") != std::string::npos);
}

TEST_CASE("audit subcommand in text form") {
    const auto res = run_cli("audit " + fixture("known7.g6") + " --format text");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("OK") != std::string::npos);
    CHECK(res.output.find("bridge: pass") != std::string::npos);
}

TEST_CASE("search subcommand with csv output") {
    const auto res = run_cli("search --order 6 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("ELrw") != std::string::npos);
}

TEST_CASE("explode subcommand") {
    const auto res = run_cli("explode " + fixture("k2.g6") + " --t 3 --format text");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("formula 7 vs brute force 7 (match)") != std::string::npos);
}

TEST_CASE("sampler runs are reproducible from the command line") {
    const std::string cmd = "sample gnp --n 50 --p 0.5 --seed 7";
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(without_duration(a.output) == without_duration(b.output));

    const auto c = run_cli("sample gnp --n 50 --p 0.5 --seed 8");
    CHECK(without_duration(a.output) != without_duration(c.output));
}

TEST_CASE("leftclique sampler from the command line") {
    const auto res =
        run_cli("sample leftclique --n 24 --t 7 --attempts 3 --seed 1 --format text");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("acceptance_rate=") != std::string::npos);
    CHECK(res.output.find("complement edges") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("search").exit_code == 2);  // neither --order nor --stream
    CHECK(run_cli("sample gnp --n 10 --p 1.5").exit_code == 2);
}

TEST_CASE("version flag") {
    const auto res = run_cli("--version");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("0.1.0") != std::string::npos);
}

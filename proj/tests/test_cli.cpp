/*
   Copyright 2026 the hypodiv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string command = std::string(HYPODIV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream out;
    out << file.rdbuf();
    return out.str();
}

std::string golden(const std::string& name) {
    return read_file(std::string(HYPODIV_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("divide golden files") {
    auto result = run_cli("divide --c 3 --n 5 --format json");
    REQUIRE(result.exit_code == 0);
    REQUIRE(result.output == golden("divide_c3_n5.json"));

    result = run_cli("divide --c 3 --n 5 --format csv");
    REQUIRE(result.exit_code == 0);
    REQUIRE(result.output == golden("divide_c3_n5.csv"));

    result = run_cli("divide --c 3 --n 5 --format svg");
    REQUIRE(result.exit_code == 0);
    REQUIRE(result.output == golden("divide_c3_n5.svg"));
}

TEST_CASE("divide behavior") {
    auto result = run_cli("divide --c 3 --n 1 --format csv");
    REQUIRE(result.exit_code == 0);
    REQUIRE(result.output.find("1,6.2831853071795862,2,3,0,9,1") != std::string::npos);

    result = run_cli("divide --c 5/2 --n 2 --format json");
    REQUIRE(result.exit_code == 0);
    // points (1/2, 0) and (5/2, 0)
    REQUIRE(result.output.find("\"x\": 0.5") != std::string::npos);
    REQUIRE(result.output.find("\"x\": 2.5") != std::string::npos);
    REQUIRE(result.output.find("\"r_squared\": \"1/4\"") != std::string::npos);
    REQUIRE(result.output.find("\"r_squared\": \"25/4\"") != std::string::npos);

    // degenerate c = 2 is accepted (warning goes to standard error)
    result = run_cli("divide --c 2 --n 2 --format json");
    REQUIRE(result.exit_code == 0);
    REQUIRE(result.output.find("\"degenerate\": true") != std::string::npos);

    REQUIRE(run_cli("divide --c 1 --n 3").exit_code == 2);
    REQUIRE(run_cli("divide --c 3/4 --n 3").exit_code == 2);
    REQUIRE(run_cli("divide --c abc --n 3").exit_code == 2);
    REQUIRE(run_cli("divide --c 3 --n 0").exit_code == 2);
    REQUIRE(run_cli("divide --c 3 --n 5 --format yaml").exit_code == 2);
    REQUIRE(run_cli("divide --c 3 --n 5 --out /nonexistent-dir/x.json").exit_code == 2);
}

TEST_CASE("polynomial behavior") {
    auto result = run_cli("polynomial --n 9");
    REQUIRE(result.exit_code == 0);
    REQUIRE(result.output.find("\"coefficients\": [\"-8667\", \"-37179\", \"0\", \"26244\"]") !=
            std::string::npos);
    REQUIRE(result.output.find("\"verdict\": \"irreducible\"") != std::string::npos);

    result = run_cli("polynomial --n 3");
    REQUIRE(result.exit_code == 0);
    REQUIRE(result.output.find("\"verdict\": \"reducible\"") != std::string::npos);
    REQUIRE(result.output.find("\"rational_roots\": [\"-3/2\", \"-3/2\", \"3\"]") !=
            std::string::npos);
    REQUIRE(result.output.find("\"factorization\": \"81 * (2x + 3)^2 * (x - 3)\"") !=
            std::string::npos);

    result = run_cli("polynomial --n 4");
    REQUIRE(result.exit_code == 0);
    REQUIRE(result.output.find("\"slope\": \"-2/3\"") != std::string::npos);
    REQUIRE(result.output.find("\"verdict\": \"irreducible\"") != std::string::npos);

    result = run_cli("polynomial --n 7/2");
    REQUIRE(result.exit_code == 0);
    REQUIRE(result.output.find("\"slope\": \"-2/3\"") != std::string::npos);

    REQUIRE(run_cli("polynomial --n 2").exit_code == 2);
    REQUIRE(run_cli("polynomial --n 5/2").exit_code == 2);
    REQUIRE(run_cli("polynomial --n 9 --p 6").exit_code == 2);
}

TEST_CASE("constructible behavior") {
    auto result = run_cli("constructible --n 6 --curve tricuspoid");
    REQUIRE(result.exit_code == 0);
    REQUIRE(result.output.find("constructible: true") != std::string::npos);

    result = run_cli("constructible --n 7 --curve circle");
    REQUIRE(result.exit_code == 1);
    REQUIRE(result.output.find("constructible: false") != std::string::npos);

    result = run_cli("constructible --n 12 --curve tricuspoid");
    REQUIRE(result.exit_code == 1);
    REQUIRE(result.output.find("reduction 12 -> 4") != std::string::npos);

    result = run_cli("constructible --n 17 --curve circle");
    REQUIRE(result.exit_code == 0);

    REQUIRE(run_cli("constructible --n 0 --curve tricuspoid").exit_code == 2);
    REQUIRE(run_cli("constructible --n 6 --curve lemniscate").exit_code == 2);
}

TEST_CASE("verify behavior") {
    auto result = run_cli("verify --c 3 --n 5");
    REQUIRE(result.exit_code == 0);
    REQUIRE(result.output.find("pass: true") != std::string::npos);
    REQUIRE(result.output.find("max_deviation:") != std::string::npos);

    REQUIRE(run_cli("verify --c 3 --n 1").exit_code == 0);
    REQUIRE(run_cli("verify --c 8/3 --n 10").exit_code == 0);

    // an unreachable tolerance fails with exit 1
    result = run_cli("verify --c 3 --n 2 --tol 1e-16");
    REQUIRE(result.exit_code == 1);
    REQUIRE(result.output.find("pass: false") != std::string::npos);

    REQUIRE(run_cli("verify --c 3 --n 5 --tol 0").exit_code == 2);
    REQUIRE(run_cli("verify --c x --n 5").exit_code == 2);
}

TEST_CASE("render behavior") {
    auto result = run_cli("render --c 3 --n 5 --division-circles");
    REQUIRE(result.exit_code == 0);
    REQUIRE(result.output.rfind("<?xml", 0) == 0);

    result = run_cli("render --c 4 --n 4");
    REQUIRE(result.exit_code == 0);

    REQUIRE(run_cli("render --c 3 --n 5 --out /nonexistent-dir/x.svg").exit_code == 2);
    REQUIRE(run_cli("render --c 3 --samples 16").exit_code == 2);
    REQUIRE(run_cli("render --c 3 --width 10").exit_code == 2);
}

TEST_CASE("usage errors") {
    REQUIRE(run_cli("").exit_code == 2);
    REQUIRE(run_cli("frobnicate").exit_code == 2);
    REQUIRE(run_cli("divide").exit_code == 2);  // missing required options
    REQUIRE(run_cli("--help").exit_code == 0);
    REQUIRE(run_cli("divide --help").exit_code == 0);
}

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>

#ifndef FREEMIX_CLI_PATH
#error "FREEMIX_CLI_PATH must point at the built binary"
#endif

namespace {

struct cli_result {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

cli_result run_cli(const std::string& args) {
    std::string command = std::string(FREEMIX_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    cli_result result;
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof(buffer), pipe)) result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("moments chain of a plain head") {
    cli_result r = run_cli("moments --chain zm:1 --k 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1") != std::string::npos);
    CHECK(r.output.find("2") != std::string::npos);
    CHECK(r.output.find("5") != std::string::npos);
}

TEST_CASE("moments chain with rademacher tail is the mixing identity") {
    cli_result r = run_cli("--format json moments --chain zm:2,rademacher --k 4");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    REQUIRE(j["rows"].size() == 4);
    // rademacher carries the all-ones moments, so the parameter-2 sequence
    // 1, 3, 12, 55 comes back unchanged
    std::vector<std::string> expected{"1", "3", "12", "55"};
    for (int k = 1; k <= 4; ++k) {
        CHECK(j["rows"][k - 1]["inductive"] == expected[k - 1]);
        CHECK(j["rows"][k - 1]["closed"] == expected[k - 1]);
        CHECK(j["rows"][k - 1]["agree"] == true);
    }
}

TEST_CASE("moments chain with a zm:1 tail composes the parameter") {
    cli_result r = run_cli("--format json moments --chain zm:2,zm:1 --k 4");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    // zm:2 mixed with zm:1 gives the parameter-3 sequence
    std::vector<std::string> expected{"1", "4", "22", "140"};
    for (int k = 1; k <= 4; ++k) {
        CHECK(j["rows"][k - 1]["inductive"] == expected[k - 1]);
        CHECK(j["rows"][k - 1]["agree"] == true);
    }
}

TEST_CASE("moments op_r on unit variance inputs") {
    cli_result r = run_cli("--format json moments --op-r zm:0 zm:0 --k 1");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["rows"][0]["exact"] == "1");
}

TEST_CASE("moments from a file") {
    std::string path = "cli_test_moments.json";
    {
        std::ofstream out(path);
        out << R"({"label":"half","even_moments":["1","3/2","7/2"]})";
    }
    cli_result r = run_cli("--format json moments --op-r file:" + path + " zm:0 --k 3");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["rows"][1]["exact"] == "3/2");
    std::remove(path.c_str());

    cli_result missing = run_cli("moments --op-r file:no_such_file.json zm:0 --k 2");
    CHECK(missing.exit_code == 2);

    {
        std::ofstream out(path);
        out << "{ not json";
    }
    cli_result bad = run_cli("moments --op-r file:" + path + " zm:0 --k 2");
    CHECK(bad.exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("chain closed form requires s <= m") {
    cli_result r = run_cli("moments --chain zm:1,rademacher,rademacher --k 2");
    CHECK(r.exit_code == 2);
    cli_result ok = run_cli("moments --chain zm:1,rademacher,rademacher --k 2 --inductive-only");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("count with brute force verification") {
    cli_result r = run_cli("count --alpha 2,1,0,0 --brute");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("6 = 6") != std::string::npos);

    cli_result one = run_cli("count --alpha 4,0,0,0");
    CHECK(one.exit_code == 0);
    CHECK(one.output.find("1") != std::string::npos);

    cli_result pairs = run_cli("--format json count --alphas \"2,0;2,0\" --m 2 --brute");
    REQUIRE(pairs.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(pairs.output);
    CHECK(j["agree"] == true);
    CHECK(j["closed_form"] == j["enumerated"]);

    cli_result bad = run_cli("count --alpha 2,1");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("count can dump partitions") {
    cli_result r = run_cli("--format json count --alpha 2,1,0,0 --dump");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    REQUIRE(j.contains("partitions"));
    CHECK(j["partitions"].size() == 6);
    // blocks are arrays of 1-based integers sorted by minimum
    for (const auto& partition : j["partitions"]) {
        int prev_min = 0;
        for (const auto& block : partition) {
            CHECK(block[0].get<int>() > prev_min);
            prev_min = block[0].get<int>();
        }
    }
}

TEST_CASE("verify suites") {
    cli_result r = run_cli("verify --suite identities --kmax 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);

    cli_result j = run_cli("--format json verify --suite identities --kmax 5");
    REQUIRE(j.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(j.output);
    CHECK(parsed["all_pass"] == true);
    for (const auto& check : parsed["checks"]) {
        CHECK(check.contains("name"));
        CHECK(check.contains("pass"));
        CHECK(check.contains("cases"));
    }

    cli_result bad = run_cli("verify --suite bogus");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("simulate is reproducible byte for byte") {
    std::string args =
        "--format json simulate --scenario matrix-product --m 1 --n 60 --trials 6 --k 2 "
        "--seed 31 --no-timestamp";
    cli_result first = run_cli(args);
    REQUIRE(first.exit_code == 0);
    cli_result second = run_cli(args);
    CHECK(first.output == second.output);

    nlohmann::json j = nlohmann::json::parse(first.output);
    REQUIRE(j["rows"].size() == 2);
    for (const auto& row : j["rows"]) {
        CHECK(row.contains("k"));
        CHECK(row.contains("estimate"));
        CHECK(row.contains("se"));
        CHECK(row.contains("exact"));
        CHECK(row.contains("rel_err"));
        CHECK(row.contains("z"));
        CHECK(row.contains("verdict"));
    }
    CHECK(j.contains("timestamp") == false);
}

TEST_CASE("simulate csv schema") {
    cli_result r = run_cli(
        "--format csv simulate --scenario matrix-product --m 1 --n 40 --trials 4 --k 1 --seed 5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.rfind("k,estimate,se,exact,rel_err,z,verdict", 0) == 0);
}

TEST_CASE("failed comparisons exit with 1") {
    // the pair-matrix first moment is (n-1)/n with zero variance, so a 1%
    // band around 1 must fail
    cli_result r = run_cli(
        "simulate --scenario graph-z2 --n 12 --trials 4 --k 1 --seed 1 --rel-tol 0.01");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("fail") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("simulate --scenario nope").exit_code == 2);
    CHECK(run_cli("count").exit_code == 2);
}

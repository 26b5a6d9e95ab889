#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

// end-to-end runs of the installed binary; path injected by the build
namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SEPR_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 512> buf{};
    RunResult r{-1, {}};
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), buf.size(), p)) r.out += buf.data();
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("compute prints the sepr-sequence of a matrix file") {
    auto file = write_temp("sepr_i3.json", R"({
        "n": 3, "radicand": 0,
        "entries": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    })");
    auto r = run_cli("compute " + file.string() + " --sepr");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "A+A+A+\n");

    auto all = run_cli("--format json compute " + file.string() + " --all");
    CHECK(all.exit_code == 0);
    auto j = nlohmann::json::parse(all.out);
    CHECK(j.at("pr") == "0]111");
    CHECK(j.at("epr") == "AAA");
    CHECK(j.at("sepr") == "A+A+A+");
}

TEST_CASE("compute accepts complex entries and object form") {
    auto file = write_temp("sepr_nan.json", R"({
        "n": 3, "radicand": 0,
        "entries": [
          [0, {"re": 0, "im": 1}, 1],
          [{"re": 0, "im": -1}, 0, 1],
          [1, 1, 0]
        ]
    })");
    auto r = run_cli("compute " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "NA-N\n");
}

TEST_CASE("compute rejects bad input with exit 2") {
    auto broken = write_temp("sepr_broken.json", R"({
        "entries": [[0, {"re": 0, "im": 1}], [{"re": 0, "im": 1}, 0]]
    })");
    CHECK(run_cli("compute " + broken.string()).exit_code == 2);

    auto noncanon = write_temp("sepr_noncanon.json", R"({ "entries": [["2/4"]] })");
    CHECK(run_cli("compute " + noncanon.string()).exit_code == 2);

    CHECK(run_cli("compute /nonexistent.json").exit_code == 2);
    CHECK(run_cli("compute").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("verify-tables reports the classification counts") {
    auto r = run_cli("verify-tables --table all");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3 + 13 + 65 entries verified, 0 mismatches\n");

    auto t1 = run_cli("verify-tables --table 1");
    CHECK(t1.exit_code == 0);
    CHECK(t1.out == "13 entries verified, 0 mismatches\n");

    auto ex = run_cli("verify-tables --export");
    CHECK(ex.exit_code == 0);
    auto j = nlohmann::json::parse(ex.out);
    CHECK(j.size() == 81);
    int complex_count = 0;
    for (const auto& e : j) {
        CHECK(e.contains("label"));
        CHECK(e.at("matrix").contains("entries"));
        if (!e.at("real").get<bool>()) ++complex_count;
    }
    CHECK(complex_count == 1);
}

TEST_CASE("rules subcommand") {
    auto ex = run_cli("rules --explain R7");
    CHECK(ex.exit_code == 0);
    CHECK(ex.out.find("AXA") != std::string::npos);

    auto bad = run_cli("rules --check A*N");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("unattainable") != std::string::npos);
    CHECK(bad.out.find("R3") != std::string::npos);

    auto good = run_cli("--format json rules --check A+N");
    CHECK(good.exit_code == 0);
    auto j = nlohmann::json::parse(good.out);
    CHECK(j.at("status") == "attainable-witnessed");
    CHECK(j.at("violations").empty());

    auto list = run_cli("rules --list");
    CHECK(list.exit_code == 0);
    CHECK(list.out.find("R23") != std::string::npos);

    CHECK(run_cli("rules --explain R99").exit_code == 2);
}

TEST_CASE("enumerate emits machine-readable reports") {
    auto r = run_cli("--format json enumerate --order 2");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("universe") == 21);
    CHECK(j.at("attainable_witnessed").size() == 13);
    CHECK(j.at("unattainable").size() == 8);
    CHECK(j.at("rule_clean_unwitnessed").empty());
}

TEST_CASE("search finds and misses witnesses with the right exit codes") {
    auto hit = run_cli("search --target A+N --order 2 --entries integer --entry-bound 1 "
                       "--class real-symmetric --exhaustive --budget 100000");
    CHECK(hit.exit_code == 0);
    auto j = nlohmann::json::parse(hit.out);
    CHECK(j.at("n") == 2);

    auto miss = run_cli("search --target A*A+ --order 2 --entries integer --entry-bound 1 "
                        "--class real-symmetric --exhaustive --budget 100000");
    CHECK(miss.exit_code == 1);
}

TEST_CASE("check-identities runs a small fuzz batch") {
    auto r = run_cli("--format json check-identities --order 3 --trials 25 --seed 5 "
                     "--entry-bound 2 --radicand 2 --entries rational");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("trials") == 25);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgaps/counting.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// runs the installed CLI with stdout/stderr captured in temp files
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string base = "qgaps_cli_test_" + std::to_string(counter++);
    std::string out_path = "/tmp/" + base + ".out";
    std::string err_path = "/tmp/" + base + ".err";
    std::string cmd = std::string(QGAPS_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

int count_lines_with(const std::string& text, const std::string& needle) {
    int count = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.find(needle) != std::string::npos)
            ++count;
    return count;
}

} // namespace

TEST_CASE("compute prints exact values") {
    auto r = run_cli("compute S 5 --r 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "14\n");

    CHECK(run_cli("compute p 5").out == "7\n");
    CHECK(run_cli("compute C 5").out == "4\n");
    CHECK(run_cli("compute S 5 --r 4").out == "8\n");
    CHECK(run_cli("compute p -3").out == "0\n");
}

TEST_CASE("compute usage errors exit 2") {
    CHECK(run_cli("compute NOPE 3").exit_code == 2);
    CHECK(run_cli("compute S 5").exit_code == 2);        // missing r
    CHECK(run_cli("compute p 5 --r 1").exit_code == 2);  // extra r
    CHECK(run_cli("compute L -4").exit_code == 2);       // negative n
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("compute cross-checks modes on demand") {
    auto r = run_cli("compute S 15 --r 2 --mode both");
    CHECK(r.exit_code == 0);
    CHECK(r.out == run_cli("compute S 15 --r 2 --mode oracle").out);
}

TEST_CASE("table formats") {
    auto csv = run_cli("table S 5 --r 4 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("n,value\n") == 0);
    CHECK(csv.out.find("5,8\n") != std::string::npos);

    auto json = run_cli("table p 0 --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.out == "[{\"n\":0,\"value\":\"1\"}]\n");

    auto plain = run_cli("table U 10 --r 2");
    CHECK(plain.exit_code == 0);
    auto dp = qgaps::mod4r_avoiding_table(10, 2);
    std::ostringstream expected;
    for (long n = 0; n <= 10; ++n)
        expected << n << ' ' << dp[n].get_str() << '\n';
    CHECK(plain.out == expected.str());
}

TEST_CASE("table output is byte-stable and purely decimal") {
    auto first = run_cli("table q 40 --format csv");
    auto second = run_cli("table q 40 --format csv");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);

    // every data row is "<digits>,<digits>" -- no scientific notation
    std::istringstream rows(first.out);
    std::string line;
    std::getline(rows, line); // header
    int row_count = 0;
    while (std::getline(rows, line)) {
        CHECK(line.find_first_not_of("0123456789,") == std::string::npos);
        ++row_count;
    }
    CHECK(row_count == 41);
}

TEST_CASE("verify subcommand") {
    auto all = run_cli("verify all --n-max 100 --r 1..4");
    CHECK(all.exit_code == 0);
    CHECK(count_lines_with(all.out, " PASS") == 20);
    CHECK(count_lines_with(all.out, "FAIL") == 0);

    auto er = run_cli("verify ER --n-max 500");
    CHECK(er.exit_code == 0);
    CHECK(er.out.find("ER PASS") == 0);

    CHECK(run_cli("verify NOPE").exit_code == 2);

    auto bad = run_cli("verify T0-corrupted-test-double --n-max 10");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);

    auto json = run_cli("verify C6 CRANK-PAR --n-max 30 --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"id\":\"C6\"") != std::string::npos);
    CHECK(json.out.find("\"id\":\"CRANK-PAR\"") != std::string::npos);
    CHECK(json.out.find("\"status\":\"pass\"") != std::string::npos);
}

TEST_CASE("json outputs parse as json") {
    auto table = run_cli("table S 12 --r 3 --format json");
    auto parsed = nlohmann::json::parse(table.out);
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == 13);
    CHECK(parsed[0]["n"] == 0);
    CHECK(parsed[0]["value"] == "1");
    CHECK(parsed[12]["value"].is_string());

    auto reports = nlohmann::json::parse(run_cli("verify all --n-max 20 --format json").out);
    REQUIRE(reports.is_array());
    CHECK(reports.size() == 20);
    for (const auto& rep : reports) {
        CHECK(rep["status"] == "pass");
        CHECK(rep["first_mismatch"].is_null());
        CHECK(rep["n_max"] == 20);
    }

    auto bad = nlohmann::json::parse(
        run_cli("verify T0-corrupted-test-double --n-max 9 --format json").out);
    CHECK(bad[0]["status"] == "fail");
    CHECK(bad[0]["first_mismatch"]["n"] == 3);
    CHECK(bad[0]["first_mismatch"]["r"] == 1);
}

TEST_CASE("cache round trip and error paths") {
    std::string path = "/tmp/qgaps_cli_test_cache.pcache";
    std::remove(path.c_str());

    auto info_fresh = run_cli("cache info");
    CHECK(info_fresh.exit_code == 0);
    CHECK(info_fresh.out == "high_water 0\n");

    CHECK(run_cli("cache save --path " + path + " --fill 40").exit_code == 0);
    auto info = run_cli("cache info --path " + path);
    CHECK(info.exit_code == 0);
    CHECK(info.out == "high_water 40\n");
    CHECK(run_cli("cache load --path " + path).exit_code == 0);

    // saving a loaded table reproduces the file byte for byte
    std::string copy = path + ".copy";
    std::string original = slurp(path);
    {
        std::ofstream out(copy, std::ios::binary);
        out << original;
    }
    CHECK(run_cli("cache info --path " + copy).out == "high_water 40\n");

    // corrupt line 7 (the value of p(5)) and expect a named line in the error
    {
        std::istringstream in(original);
        std::ofstream out(path, std::ios::binary);
        std::string line;
        for (int line_no = 1; std::getline(in, line); ++line_no)
            out << (line_no == 7 ? "bogus" : line) << '\n';
    }
    auto corrupt = run_cli("cache load --path " + path);
    CHECK(corrupt.exit_code == 3);
    CHECK(corrupt.err.find("line 7") != std::string::npos);

    CHECK(run_cli("cache load --path /tmp/definitely_missing.pcache").exit_code == 3);
    CHECK(run_cli("cache load").exit_code == 2); // missing --path

    std::remove(path.c_str());
    std::remove(copy.c_str());
}

TEST_CASE("shared cache flag persists across commands") {
    std::string path = "/tmp/qgaps_cli_test_shared.pcache";
    std::remove(path.c_str());

    auto first = run_cli("compute p 60 --cache " + path);
    CHECK(first.exit_code == 0);
    CHECK(run_cli("cache info --path " + path).out == "high_water 60\n");

    // reuse without growth leaves the file alone
    auto before = slurp(path);
    CHECK(run_cli("compute p 50 --cache " + path).exit_code == 0);
    CHECK(slurp(path) == before);
    std::remove(path.c_str());
}

TEST_CASE("QGAPS_CACHE supplies the default cache path") {
    std::string path = "/tmp/qgaps_cli_test_env.pcache";
    std::remove(path.c_str());
    setenv("QGAPS_CACHE", path.c_str(), 1);
    auto r = run_cli("compute p 30");
    unsetenv("QGAPS_CACHE");
    CHECK(r.exit_code == 0);
    CHECK(run_cli("cache info --path " + path).out == "high_water 30\n");
    std::remove(path.c_str());
}

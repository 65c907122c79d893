#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <set>
#include <string>

#include "json.hpp"

#ifndef QPFD_CLI_PATH
#error "QPFD_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QPFD_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, std::move(out)};
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

// Drops fields that legitimately vary between runs.
nlohmann::json scrubbed(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    j["summary"].erase("elapsed_ms");
    j["config"].erase("jobs");
    return j;
}

}  // namespace

TEST_CASE("verify passes and respects exit code 0") {
    auto r = run_cli("verify --identity euler --n-max 4 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[pass] euler n=1") != std::string::npos);
    CHECK(r.out.find("summary: pass 4, fail 0, skipped 0") != std::string::npos);
}

TEST_CASE("verify failure exits 1") {
    auto r = run_cli("verify --identity qpfd_m1 --n-max 2 --trials 1 --mutate");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("[fail]") != std::string::npos);
}

TEST_CASE("verify usage errors exit 2") {
    CHECK(run_cli("verify --identity no_such_identity").exit_code == 2);
    CHECK(run_cli("verify --mode numeric-q --q 1 --identity euler").exit_code == 2);
    CHECK(run_cli("verify --mode numeric-q --q 0 --identity euler").exit_code == 2);
    CHECK(run_cli("verify --mode numeric-q --q -1 --identity euler").exit_code == 2);
    CHECK(run_cli("verify --q nonsense --identity euler").exit_code == 2);
    CHECK(run_cli("verify --mode bogus").exit_code == 2);
    CHECK(run_cli("verify --n-max 900").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("numeric mode accepts a safe rational q") {
    auto r = run_cli("verify --identity euler --n-max 3 --mode numeric-q --q 5/2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("q=5/2") != std::string::npos);
}

TEST_CASE("decompose worked example") {
    auto r = run_cli("decompose -Q 1 --poles 1,2");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "-1/(x - 1) + 1/(x - 2)");
    CHECK(r.out.find("oracle agreement: yes") != std::string::npos);
    CHECK(r.out.find("recombination: exact") != std::string::npos);
}

TEST_CASE("decompose with multiplicity and q coefficients") {
    auto r = run_cli("decompose -Q 1 --poles 0,1 -m 2");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "2/x + 1/x^2 - 2/(x - 1) + 1/(x - 1)^2");

    auto rq = run_cli("decompose -Q \"q*x - 1\" --poles=-1/2,3");
    CHECK(rq.exit_code == 0);
    CHECK(rq.out.find("oracle agreement: yes") != std::string::npos);
    CHECK(rq.out.find("(x + 1/2)") != std::string::npos);
}

TEST_CASE("decompose input errors exit 2") {
    CHECK(run_cli("decompose -Q 1 --poles 1,1").exit_code == 2);         // duplicate poles
    CHECK(run_cli("decompose -Q x^2 --poles 1,2").exit_code == 2);       // degree too large
    CHECK(run_cli("decompose -Q \"x +\" --poles 1").exit_code == 2);     // parse error
    CHECK(run_cli("decompose -Q 1 --poles \"1,,2\"").exit_code == 2);    // empty pole entry
    CHECK(run_cli("decompose -Q 1 --poles 1/0").exit_code == 2);         // zero denominator
    CHECK(run_cli("decompose -Q 1").exit_code == 2);                     // missing --poles
}

TEST_CASE("list shows the catalog in both formats") {
    auto text = run_cli("list");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("qpfd") != std::string::npos);
    CHECK(text.out.find("zheng") != std::string::npos);

    auto json = run_cli("list -o json");
    CHECK(json.exit_code == 0);
    auto arr = nlohmann::json::parse(json.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() >= 18);
}

TEST_CASE("bench runs and honors --trials 0") {
    auto r = run_cli("bench --s-max 2 --m-max 2 --trials 2 --seed 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("closed_us") != std::string::npos);

    auto header_only = run_cli("bench --trials 0");
    CHECK(header_only.exit_code == 0);
    CHECK(first_line(header_only.out).find("s  m") != std::string::npos);
    CHECK(header_only.out.find('\n') == header_only.out.size() - 1);  // just the header
}

TEST_CASE("json report is deterministic under a fixed seed") {
    std::string args = "verify --identity \"qpfd*\" --n-max 2 --m-max 2 --trials 2 --seed 42 -o json";
    auto a = run_cli(args);
    auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(scrubbed(a.out) == scrubbed(b.out));

    // Thread count does not change the report content or order.
    auto c = run_cli(args + " -j 4");
    REQUIRE(c.exit_code == 0);
    CHECK(scrubbed(a.out) == scrubbed(c.out));
}

TEST_CASE("json report covers the whole catalog") {
    auto r = run_cli("verify --identity all --n-max 2 --m-max 1 --trials 1 --seed 9 -o json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["version"] == 1);
    std::set<std::string> names;
    for (const auto& e : j["results"]) {
        names.insert(e["name"].get<std::string>());
        CHECK(e["status"] == "pass");
    }
    CHECK(names.size() >= 18);
    CHECK(j["summary"]["fail"] == 0);
}

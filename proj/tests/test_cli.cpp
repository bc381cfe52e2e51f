#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the built binary with stderr folded away; stdout must stay clean in
// machine modes, so only stdout is captured.
RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("PERSYM_CLI_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "PERSYM_CLI_BIN must point at the persym binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("enumerate human output") {
    RunResult r = run_cli("enumerate --n 1 --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("gamma_0 = 1") != std::string::npos);
    CHECK(r.out.find("gamma_1 = 3") != std::string::npos);
    CHECK(r.out.find("sum = 4") != std::string::npos);
}

TEST_CASE("enumerate json carries the worked census") {
    RunResult r = run_cli("enumerate --n 3 --k 6 --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(j["k"] == 6);
    CHECK(j["gamma"] == json::array({1, 21, 1162, 20160, 258720, 1128960, 688128}));
    CHECK(j["provenance"][0] == "enumeration");
    // round-trip: parsing the dump reproduces the document
    CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("enumerate csv") {
    RunResult r = run_cli("enumerate --n 1 --k 2 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,k,i,gamma_i,source") != std::string::npos);
    CHECK(r.out.find("1,2,2,4,enumeration") != std::string::npos);
}

TEST_CASE("enumerate budget refusal") {
    RunResult r = run_cli("enumerate --n 9 --k 6");
    CHECK(r.exit_code == 2);

    // env budget is honored, and the flag overrides it
    RunResult env_block = run_cli("enumerate --n 3 --k 6 --json");  // needs 21 bits
    CHECK(env_block.exit_code == 0);
    RunResult blocked = run_cli("enumerate --n 3 --k 6");
    CHECK(blocked.exit_code == 0);
    setenv("PERSYM_BUDGET_BITS", "20", 1);
    RunResult env_small = run_cli("enumerate --n 3 --k 6");
    CHECK(env_small.exit_code == 2);
    RunResult flag_wins = run_cli("enumerate --n 3 --k 6 --budget-bits 25 --json");
    CHECK(flag_wins.exit_code == 0);
    unsetenv("PERSYM_BUDGET_BITS");
}

TEST_CASE("rq modes") {
    RunResult formula = run_cli("rq --n 2 --k 1 --q 2 --mode formula --json");
    CHECK(formula.exit_code == 0);
    json jf = json::parse(formula.out);
    CHECK(jf["value"] == 304);
    CHECK(jf["provenance"] == "eq4.1");

    RunResult brute = run_cli("rq --n 2 --k 1 --q 2 --mode brute --json");
    CHECK(brute.exit_code == 0);
    CHECK(json::parse(brute.out)["value"] == 304);

    RunResult moment = run_cli("rq --n 2 --k 1 --q 2 --mode moment --json");
    CHECK(moment.exit_code == 0);
    CHECK(json::parse(moment.out)["value"] == 304);

    RunResult r1 = run_cli("rq --n 1 --k 2 --q 1 --mode formula --json");
    CHECK(json::parse(r1.out)["value"] == 7);

    CHECK(run_cli("rq --n 1 --k 1 --q 3 --mode formula").exit_code == 2);
    CHECK(run_cli("rq --n 1 --k 3 --q 1 --mode moment").exit_code == 2);  // k > 2n
    CHECK(run_cli("rq --n 1 --k 1 --q 1 --mode nonsense").exit_code == 2);
}

TEST_CASE("solve-moments verified rows") {
    RunResult r = run_cli("solve-moments --n 4 --k 3 --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["gamma"] == json::array({1, 45, 1650, 63840}));
    for (const auto& f : j["flags"]) CHECK(f == "enumeration-verified");
}

TEST_CASE("solve-moments above budget is flagged, not verified") {
    RunResult r = run_cli("solve-moments --n 5 --k 6 --postulates --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["flags"][0] == "system-derived");
    CHECK(j["flags"][2] == "postulate-dependent");
    CHECK(j["flags"][6] == "postulate-dependent");
    // gamma_6 at n=5, k=6 exceeds 2^32; still exact
    CHECK(j["gamma"][6].is_number_unsigned());
}

TEST_CASE("solve-moments underdetermined without postulates") {
    CHECK(run_cli("solve-moments --n 2 --k 5").exit_code == 2);
    CHECK(run_cli("solve-moments --n 2 --k 5 --postulates").exit_code == 0);
}

TEST_CASE("verify suite endpoints") {
    RunResult r = run_cli("verify --suite thm41 --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["suite"] == "thm41");
    CHECK(j["status"] == "pass");
    CHECK(j["checks"].size() > 10);
    for (const auto& c : j["checks"]) {
        CHECK(c["pass"] == true);
        CHECK(c["provenance"].get<std::string>().size() > 0);
    }
    CHECK(json::parse(j.dump()) == j);

    CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("enumerate --k 1").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

#ifndef SHIHA_CLI_BIN
#error "SHIHA_CLI_BIN must point at the built executable"
#endif

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SHIHA_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("eval returns the closed-form density at zero") {
    const RunResult r = run_cli("eval --omega 1 --eta 1 --what pdf --at 0 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "y,pdf\n0.000000,0.750000\n");
}

TEST_CASE("json envelope carries command, inputs, results, version") {
    const RunResult r = run_cli("entropy --omega 2 --eta 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"command\": \"entropy\"") != std::string::npos);
    CHECK(r.out.find("\"inputs\"") != std::string::npos);
    CHECK(r.out.find("\"entropy\": 0.306853") != std::string::npos);
    CHECK(r.out.find("\"version\"") != std::string::npos);
}

TEST_CASE("seeded commands are byte-identical across runs") {
    const std::string cmd = "sample --omega 0.5 --eta 0.5 --n 25 --seed 99";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());

    const std::string sim =
        "simulate --omega 1 --eta 1 --sizes 30 --replications 10 --seed 5";
    CHECK(run_cli(sim).out == run_cli(sim).out);
}

TEST_CASE("full precision flag widens the output") {
    const RunResult lo = run_cli("quantiles --omega 1 --eta 1 --probs 0.5 --format csv");
    const RunResult hi = run_cli(
        "quantiles --omega 1 --eta 1 --probs 0.5 --format csv --full-precision");
    CHECK(lo.out.find("0.669587") != std::string::npos);
    CHECK(hi.out.find("0.669586767") != std::string::npos);  // more digits survive
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("eval --omega 1 --eta 1").exit_code == 2);            // no --at/--grid
    CHECK(run_cli("eval --omega 1 --eta 1 --at 1 --grid 0:1:5").exit_code == 2);
    CHECK(run_cli("sample --omega 1 --eta 1 --n 10").exit_code == 2);   // missing seed
    CHECK(run_cli("quantiles --omega 1 --eta 1 --probs 1.5").exit_code == 2);
    CHECK(run_cli("eval --omega -1 --eta 0 --at 1").exit_code == 2);
    CHECK(run_cli("reproduce --table 12").exit_code == 2);
}

TEST_CASE("runtime failures exit with code 1") {
    CHECK(run_cli("fit --data /nonexistent.csv").exit_code == 1);
    CHECK(run_cli("ttt --data /nonexistent.csv").exit_code == 1);
}

TEST_CASE("help exits cleanly") {
    const RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("eval") != std::string::npos);
    CHECK(r.out.find("reproduce") != std::string::npos);
}

TEST_CASE("fit emits one ranked row per family") {
    const RunResult r = run_cli("fit --data electronic_components --format csv");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 7);    // header + six families
    CHECK(r.out.rfind("family,", 0) == 0);
    // the aic column (4th) is nondecreasing down the table
    double prev = -1e300;
    std::size_t pos = r.out.find('\n') + 1;
    while (pos < r.out.size()) {
        const std::size_t end = r.out.find('\n', pos);
        const std::string line = r.out.substr(pos, end - pos);
        std::size_t c = 0;
        for (int i = 0; i < 3; ++i) c = line.find(',', c) + 1;
        const double aic = std::atof(line.c_str() + c);
        CHECK(aic >= prev);
        prev = aic;
        pos = end + 1;
    }
}

TEST_CASE("grid evaluation produces the requested row count") {
    const RunResult r = run_cli("eval --omega 1 --eta 0.5 --what cdf --grid 0:10:100 --format csv");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 101);    // header + 100 points
    CHECK(r.out.find("10.000000") != std::string::npos);
}

TEST_CASE("reproduce table 1 passes and is deterministic") {
    const RunResult a = run_cli("reproduce --table 1");
    CHECK(a.exit_code == 0);
    const RunResult b = run_cli("reproduce --table 1");
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"failing\": 0") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "plectic/parser.hpp"

using namespace plectic;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Run a shell command, capturing one stream (stdout by default).
RunResult run(const std::string& args, bool capture_stderr = false) {
    const std::string cmd = std::string(PLECHECK_BIN) + " " + args +
                            (capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GoldenCase {
    const char* name;
    int exit_code;
};

constexpr GoldenCase kGolden[] = {
    {"basic", 0},        {"courant", 0},  {"morphism", 0},
    {"extension", 0},    {"atiyah", 0},   {"cocycle2", 0},
    {"cocycle3", 0},     {"cocycle3-bad", 1}, {"hamiltonian-bad", 1},
};

}  // namespace

TEST_CASE("machine output matches the golden files byte for byte") {
    for (const auto& c : kGolden) {
        CAPTURE(c.name);
        const RunResult r = run(fixture(std::string(c.name) + ".plc") + " --machine");
        CHECK(r.exit_code == c.exit_code);
        CHECK(r.output == slurp(fixture(std::string(c.name) + ".golden")));
    }
}

TEST_CASE("rejected inputs exit with code 2") {
    const RunResult parse = run(fixture("parse-error.plc"), /*capture_stderr=*/true);
    CHECK(parse.exit_code == 2);
    CHECK(parse.output.find("parse error:") == 0);
    CHECK(parse.output.find("line 3") != std::string::npos);

    const RunResult degree =
        run(fixture("cocycle2.plc") + " --max-degree 1", /*capture_stderr=*/true);
    CHECK(degree.exit_code == 2);
    CHECK(degree.output.find("exceeds") != std::string::npos);

    const RunResult missing = run(fixture("no-such-file.plc"), /*capture_stderr=*/true);
    CHECK(missing.exit_code == 2);

    const RunResult flag = run(fixture("basic.plc") + " --frobnicate", /*capture_stderr=*/true);
    CHECK(flag.exit_code == 2);
}

TEST_CASE("a satisfied degree bound changes nothing") {
    const RunResult bounded = run(fixture("basic.plc") + " --machine --max-degree 4");
    CHECK(bounded.exit_code == 0);
    CHECK(bounded.output == slurp(fixture("basic.golden")));
}

TEST_CASE("output is stable under parallel execution and explicit seeds") {
    for (const char* name : {"basic", "courant", "cocycle3-bad"}) {
        CAPTURE(name);
        const std::string base = slurp(fixture(std::string(name) + ".golden"));
        CHECK(run(fixture(std::string(name) + ".plc") + " --machine --jobs 4").output == base);
        CHECK(run(fixture(std::string(name) + ".plc") + " --machine --seed 99").output == base);
    }
}

TEST_CASE("human output reports the seed and a summary") {
    const RunResult r = run(fixture("basic.plc") + " --seed 123");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("seed: 123") != std::string::npos);
    CHECK(r.output.find("chart: R3 (x, y, z)") != std::string::npos);
    CHECK(r.output.find("0 failures") != std::string::npos);
    CHECK(r.output.find("[PASS]") != std::string::npos);

    const RunResult bad = run(fixture("hamiltonian-bad.plc"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("1 failures") != std::string::npos);
    CHECK(bad.output.find("[FAIL]") != std::string::npos);
}

TEST_CASE("every valid fixture survives a parse-print-parse round trip") {
    for (const auto& c : kGolden) {
        CAPTURE(c.name);
        const Document d1 = parse_document(slurp(fixture(std::string(c.name) + ".plc")));
        const Document d2 = parse_document(print_document(d1));
        CHECK(documents_equal(d1, d2));
        // Printing is a fixed point after one normalization pass.
        CHECK(print_document(d1) == print_document(d2));
    }
}

TEST_CASE("printer preserves degrees of zero forms and fields") {
    const Document d1 = parse_document(
        "chart R3 (x, y, z)\n"
        "form a = x*dy - x*dy\n"
        "form b = 0*dx^dz\n"
        "field v = y*@x - y*@x\n"
        "section s = (0*@x, 0*dz)\n");
    CHECK(d1.forms.at("a").degree() == 1);
    CHECK(d1.forms.at("a").is_zero());
    const Document d2 = parse_document(print_document(d1));
    CHECK(documents_equal(d1, d2));
    CHECK(d2.forms.at("a").degree() == 1);
    CHECK(d2.forms.at("b").degree() == 2);
}

// Acceptance suite: runs every criterion at its pinned tolerance and prints
// one pass/fail line per criterion. Criterion 13 (full-suite runtime and
// byte-determinism) drives the CLI binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "chronocalc/acceptance.hpp"

using chronocalc::acceptance::CriterionResult;
using chronocalc::acceptance::run_criterion;

namespace {

void report(const CriterionResult& r) {
    std::printf("criterion %2d %-36s %s  value=%.3e tol=%.3e (%.0f ms)\n", r.id, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.value, r.tolerance, r.runtime_ms);
    if (!r.detail.empty()) std::printf("             %s\n", r.detail.c_str());
    std::fflush(stdout);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("acceptance criteria 1-12") {
    for (int id = 1; id <= 12; ++id) {
        const CriterionResult r = run_criterion(id);
        report(r);
        CHECK_MESSAGE(r.pass, "criterion ", id, " (", r.name, ") value=", r.value,
                      " tol=", r.tolerance, " detail=", r.detail);
    }
}

TEST_CASE("criterion 13: suite all under ten minutes, byte-deterministic CSV") {
    const char* bin = std::getenv("CHRONOCALC_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "CHRONOCALC_BIN must point at the CLI binary");

    auto run_suite = [&](const std::string& csv) {
        const std::string cmd =
            std::string(bin) + " suite all --csv " + csv + " > /dev/null 2>&1";
        const auto t0 = std::chrono::steady_clock::now();
        const int status = std::system(cmd.c_str());
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return std::pair<int, double>(WEXITSTATUS(status), secs);
    };

    const auto [code1, secs1] = run_suite("/tmp/cc_suite_run1.csv");
    const auto [code2, secs2] = run_suite("/tmp/cc_suite_run2.csv");
    std::printf("criterion 13 suite_all runs: %.1f s and %.1f s (exit %d/%d)\n", secs1, secs2,
                code1, code2);
    const bool pass = code1 == 0 && code2 == 0 && secs1 < 600.0 && secs2 < 600.0 &&
                      slurp("/tmp/cc_suite_run1.csv") == slurp("/tmp/cc_suite_run2.csv") &&
                      !slurp("/tmp/cc_suite_run1.csv").empty();
    std::printf("criterion 13 full_suite_determinism %s\n", pass ? "PASS" : "FAIL");
    CHECK(pass);
}

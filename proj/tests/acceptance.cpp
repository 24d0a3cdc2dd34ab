#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "tanglebounds/jones.hpp"
#include "tanglebounds/verify.hpp"

namespace {

// Runs one verification suite, prints a single summary line, enforces the
// wall-clock budget, and asserts every check in the suite.
void run_criterion(const char* label, const std::string& suite, int cap,
                   double budget_seconds) {
    auto start = std::chrono::steady_clock::now();
    tb::SuiteResult res = tb::run_suite(suite, cap, std::nullopt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();

    int failed = 0;
    for (const tb::CheckResult& c : res.checks)
        if (!c.pass) ++failed;
    std::printf("%s %s  [%s: %zu checks, %d failed, %.2fs]\n", label,
                res.pass ? "PASS" : "FAIL", suite.c_str(), res.checks.size(),
                failed, secs);
    for (const tb::CheckResult& c : res.checks) {
        if (!c.pass)
            std::printf("    failing: %s%s%s\n", c.name.c_str(),
                        c.detail.empty() ? "" : " — ", c.detail.c_str());
        CHECK_MESSAGE(c.pass, c.name, ": ", c.detail);
    }
    CHECK_MESSAGE(secs < budget_seconds, suite, " exceeded its time budget");
}

}  // namespace

TEST_CASE("criterion_1") {
    // dual-route Jones agreement on every corpus fixture within 16 crossings
    run_criterion("criterion_1", "jones-oracle", 16, 10.0);
}

TEST_CASE("criterion_2") {
    // braid-closure Jones equals the closed form (up to mirror) on four knots
    run_criterion("criterion_2", "torus-closed-form", tb::default_state_sum_cap,
                  30.0);
}

TEST_CASE("criterion_3") {
    // torus sweep: crosscap k+1, head-tail count at most 2, for q in {3,5,7}
    run_criterion("criterion_3", "family-a", tb::default_state_sum_cap, 5.0);
}

TEST_CASE("criterion_4") {
    // doubled connect sums: reduced graph counts, cycle rank, Jones head
    run_criterion("criterion_4", "family-b", tb::default_state_sum_cap, 300.0);
}

TEST_CASE("criterion_5") {
    // head-tail count equals the twist number on reduced alternating fixtures
    run_criterion("criterion_5", "twist-equality", tb::default_state_sum_cap,
                  60.0);
}

TEST_CASE("criterion_6") {
    // sandwich and external-loss inequalities across the labeled sum corpus
    run_criterion("criterion_6", "sum-bounds", tb::default_state_sum_cap, 120.0);
}

TEST_CASE("criterion_7") {
    // twist additivity across seams and the closure twist bounds
    run_criterion("criterion_7", "twist-bounds", tb::default_state_sum_cap, 60.0);
}

TEST_CASE("criterion_8") {
    // every applicable crosscap interval is consistent on every fixture
    run_criterion("criterion_8", "intervals", tb::default_state_sum_cap, 120.0);
}

TEST_CASE("criterion_9") {
    // negative doubling preserves one-sided adequacy on the whole corpus
    run_criterion("criterion_9", "adequacy-doubles", tb::default_state_sum_cap,
                  120.0);
}

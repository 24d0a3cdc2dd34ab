#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tb {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass = true;
};

// Suites in "all" run order.
std::vector<std::string> suite_names();

// Run one suite (or "all"). cap bounds state-sum sizes; fixtures_dir, when
// set, names a directory of extra .pd files swept by the dual-route Jones
// check (a file that fails to parse or validate is a named check failure).
// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& suite, int cap,
                      const std::optional<std::string>& fixtures_dir);

}  // namespace tb

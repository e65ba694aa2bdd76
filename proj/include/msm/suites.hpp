#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace msm {

// Knobs shared by every property suite.  `iterations` is the number of random
// trials for sampled suites (deterministic table suites ignore it), and
// `tolerance_abs` is the absolute slack for checks that accumulate solver
// round-off.  Identities that hold at formula precision use the tighter pinned
// slacks in suites.cpp instead of this knob.
struct SuiteConfig {
    std::uint64_t seed = 42;
    std::int64_t iterations = 10000;
    double tolerance_abs = 1e-9;
    std::size_t solver_size_cap = 2000;
};

struct SuiteResult {
    std::string name;
    std::int64_t checks = 0;    // individual property checks executed
    std::int64_t failures = 0;
    std::string counterexample;  // compact JSON for the first failure, else empty

    bool passed() const { return failures == 0; }
};

struct Suite {
    std::string name;
    std::string description;
    std::function<SuiteResult(const SuiteConfig&)> run;
};

// Every property suite, sorted by name.  Each suite draws from an independent
// generator derived from (config.seed, suite name), so the set can run in any
// order or in parallel without changing any result.
const std::vector<Suite>& all_suites();

// Runs one suite by name; throws ValidationError for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

// Runs every suite concurrently and returns results in name order.
std::vector<SuiteResult> run_all_suites(const SuiteConfig& config);

}  // namespace msm

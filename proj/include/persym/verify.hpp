#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace persym {

struct CheckRecord {
    std::string id;
    std::string inputs;
    std::string expected;
    std::string provenance;
    std::string computed;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;
    double wall_seconds = 0.0;

    bool all_pass() const;
    std::size_t failures() const;
};

struct SuiteOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
    int budget_bits = 30;
};

// The runnable suite names, in canonical order ("all" runs them all with a
// shared enumeration cache).
const std::vector<std::string>& suite_names();

// Runs one named suite (or "all"). Throws std::invalid_argument for an
// unknown name. Results are deterministic for every thread count.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opt = {});

// The long-running beyond-paper check: full enumerations at (n,k) = (4,5)
// and (5,5) (the latter is the 2^30-seed scan) against the k=5 table rows.
// Deliberately not part of any named suite.
VerificationReport run_postulate_stress(const SuiteOptions& opt = {});

}  // namespace persym

// Verification harness: each suite compares a closed form against an
// independent brute-force oracle (or a pinned constant) and produces a
// structured, deterministic report.
#pragma once

#include <string>
#include <vector>

#include "ddyck/types.hpp"

namespace ddyck {

struct VerifyOptions {
    int max_n = 10;
    int max_d = 3;
    // Mutation-test hook: bump the constant part of one numerator term of
    // T_d's closed form by delta (term index 0..17; -1 = no corruption).
    int corrupt_fd_term = -1;
    long long corrupt_fd_delta = 1;
};

// d / n use -1 for "not applicable" (identity checks, d-independent checks);
// such fields are omitted from the JSON rendering.
struct CheckRecord {
    std::string label;
    int d;
    int n;
    std::string source;  // where `expected` comes from: formula | series | table | oracle
    std::string expected;
    std::string observed;
    bool pass;
};

struct SuiteReport {
    std::string suite;
    bool pass;
    std::vector<CheckRecord> checks;
};

struct VerificationReport {
    bool pass;
    std::vector<SuiteReport> suites;
};

// suite: one of eq1, thm2, thm3, thm5, thm6, or "all". A check that throws
// is recorded as failed (observed = the error), never aborts the run.
VerificationReport run_verification(const std::string& suite, const VerifyOptions& options);

bool is_known_suite(const std::string& suite);

// Pretty JSON (2-space indent, trailing newline); field order is fixed so
// reports are byte-identical run to run when the timestamp is excluded.
std::string report_json(const VerificationReport& report, bool include_timestamp);

}  // namespace ddyck

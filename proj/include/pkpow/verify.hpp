#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pkpow/common.hpp"

namespace pkpow {

// ---------------------------------------------------------------------------
// Identity batteries.  Each suite runs a deterministic set of checks (seeded
// samples use splitmix64, so reports are byte-stable) and returns the full
// outcome; the CLI `verify` subcommand and the test suites both drive these.
// ---------------------------------------------------------------------------

struct VerifyFailure {
    std::string case_id;  // inputs and the identity that was violated
    double lhs = 0.0;
    double rhs = 0.0;
    double deviation = 0.0;
};

struct VerifyReport {
    std::string suite;
    uint64_t cases = 0;
    std::vector<VerifyFailure> failures;
    double max_deviation = 0.0;
    std::vector<std::string> notes;  // report-only diagnostics

    bool ok() const { return failures.empty(); }
};

VerifyReport verify_characters(uint64_t seed);
VerifyReport verify_singular(uint64_t seed);
VerifyReport verify_circle(uint64_t seed);
VerifyReport verify_hua(uint64_t seed);

/// suite in {characters, singular, circle, hua, all}; unknown suite throws
/// DomainError.
std::vector<VerifyReport> run_verify(const std::string& suite, uint64_t seed);

}  // namespace pkpow

#pragma once

#include <optional>

#include "primecert/report.hpp"
#include "primecert/primes.hpp"

namespace primecert {

/// One verification run: which suites, how deep to sieve, working precision
/// for the interval checks, and where reports go.
struct RunConfig {
    std::vector<SuiteId> suites;
    uint64_t sieve_limit = 0;                    // 0: computed minimum for the suites
    Rational precision = Rational(1, 1'000'000'000);
    long series_cap = 10000;
    std::vector<uint64_t> crt_qs = {13, 23, 53, 101};
    uint64_t crt_q_cap = 101;                    // desk cap for block construction
    uint64_t scan_cap = 2'000'000'000;           // largest 8P scanned directly
    std::optional<std::string> cache_dir;        // prime-table cache, optional
};

struct RunResult {
    std::vector<SuiteResult> suites;
    Verdict verdict = Verdict::fail;
    std::string first_failure;   // claim_id of the first failing claim, if any
};

/// Smallest sieve limit the selected suites need; a configured limit below
/// this is raised to it.
uint64_t min_sieve_limit(const std::vector<SuiteId>& suites, const std::vector<uint64_t>& crt_qs);

/// Executes the selected suites in dependency order against one shared
/// prime table.  Pure apart from the optional prime-cache file.
RunResult run(const RunConfig& config);

/// All suites, in dependency order.
std::vector<SuiteId> all_suites();

std::optional<SuiteId> suite_from_name(const std::string& name);

/// Locates a claim by id: runs the owning suite with a minimal config and
/// returns its report.  UsageError for ids that match no suite or claim.
CertificateReport explain(const std::string& claim_id);

} // namespace primecert

#include "primecert/runner.hpp"

#include <algorithm>
#include <filesystem>

#include "primecert/certificates.hpp"
#include "primecert/oracle.hpp"
#include "primecert/tail.hpp"

namespace primecert {

std::vector<SuiteId> all_suites() {
    return {SuiteId::constants, SuiteId::table1, SuiteId::ranges, SuiteId::records,
            SuiteId::tail, SuiteId::oracle, SuiteId::crt};
}

std::optional<SuiteId> suite_from_name(const std::string& name) {
    for (SuiteId id : all_suites())
        if (name == suite_name(id)) return id;
    return std::nullopt;
}

uint64_t min_sieve_limit(const std::vector<SuiteId>& suites, const std::vector<uint64_t>& crt_qs) {
    uint64_t limit = 100;   // floor so a table always exists
    for (SuiteId s : suites) {
        switch (s) {
            case SuiteId::constants: limit = std::max<uint64_t>(limit, 2'000'000); break;
            case SuiteId::table1: limit = std::max<uint64_t>(limit, 1'160); break;
            case SuiteId::ranges: limit = std::max<uint64_t>(limit, 31'480); break;
            case SuiteId::records: limit = std::max<uint64_t>(limit, 43'103); break;
            case SuiteId::oracle: limit = std::max<uint64_t>(limit, 30); break;
            case SuiteId::tail: break;   // pure interval checks, no sieve needed
            case SuiteId::crt: {
                // blocks need primes to q; scans need base primes to sqrt(8P),
                // which stays below 43,000 for every q scanned directly
                limit = std::max<uint64_t>(limit, 43'000);
                for (uint64_t q : crt_qs) limit = std::max(limit, q + 2);
                break;
            }
        }
    }
    return limit;
}

namespace {

PrimeTable build_table(const RunConfig& config, uint64_t limit) {
    if (config.cache_dir) {
        const std::filesystem::path dir(*config.cache_dir);
        const std::filesystem::path file = dir / ("primes_" + std::to_string(limit) + ".bin");
        if (auto cached = load_prime_cache(file, limit)) return std::move(*cached);
        PrimeTable table = PrimeTable::sieve(limit);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (!ec) save_prime_cache(table, file);
        return table;
    }
    return PrimeTable::sieve(limit);
}

std::vector<CertificateReport> run_oracle_suite(const PrimeTable& table) {
    std::vector<CertificateReport> out;
    for (std::size_t i = 0; i <= 8; ++i) {
        ReportBuilder b("oracle.i" + std::to_string(i),
                        "Section 2 densities vs residue census, i = " + std::to_string(i));
        const OracleVerdict v = oracle_equals_formula(i, table);
        b.fact("census counts / modulus equal delta_m(" + std::to_string(i) +
                   ") exactly for all m",
               v.pass, std::to_string(v.equalities_checked) + " equalities",
               v.pass ? "-" : v.first_mismatch);
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("oracle.cross-strategy", "residue census self-check");
        bool agree = true;
        for (std::size_t i = 0; i <= 6; ++i) {
            const ResidueCensus walk = census(i, table);
            const ResidueCensus incl = census_inclusion_exclusion(i, table);
            if (walk.counts != incl.counts || walk.modulus != incl.modulus) agree = false;
        }
        b.fact("exhaustive walk and inclusion-exclusion agree for i <= 6", agree, "7 censuses",
               "-");
        out.push_back(b.finish());
    }
    return out;
}

std::vector<CertificateReport> run_tail_suite(const RunConfig& config) {
    const LogConfig cfg{config.series_cap};
    std::vector<CertificateReport> out = verify_tail_constants(config.precision, cfg);
    out.push_back(verify_DM_identity(config.precision, cfg));
    out.push_back(verify_h_monotone(config.precision, cfg));
    return out;
}

std::vector<CertificateReport> run_crt_suite(const RunConfig& config, const PrimeTable& table) {
    const LogConfig cfg{config.series_cap};
    std::vector<CertificateReport> out;
    for (uint64_t q : config.crt_qs) {
        const CrtBlock block = build_crt_block(q, table, config.crt_q_cap);
        out.push_back(verify_crt_block(block, table));
        out.push_back(report_gap_scan(block, table, config.scan_cap));
        out.push_back(two_primes_in_P_2P(block, table, config.scan_cap, config.precision, cfg));
    }
    return out;
}

} // namespace

RunResult run(const RunConfig& config) {
    if (config.suites.empty()) throw UsageError("run: no suites selected");
    if (config.precision.sign() <= 0) throw UsageError("run: precision must be positive");
    for (uint64_t q : config.crt_qs)
        if (q < 13) throw UsageError("run: crt q must be >= 13");

    // dependency order regardless of the order given
    std::vector<SuiteId> ordered;
    for (SuiteId id : all_suites())
        if (std::find(config.suites.begin(), config.suites.end(), id) != config.suites.end())
            ordered.push_back(id);

    const uint64_t needed = min_sieve_limit(ordered, config.crt_qs);
    const uint64_t limit = std::max(needed, config.sieve_limit);
    const PrimeTable table = build_table(config, limit);
    const LogConfig cfg{config.series_cap};

    RunResult result;
    for (SuiteId id : ordered) {
        SuiteResult sr;
        sr.id = id;
        switch (id) {
            case SuiteId::constants: sr.reports = verify_constants(table); break;
            case SuiteId::table1: sr.reports = verify_table1(table); break;
            case SuiteId::ranges: sr.reports = verify_ranges(table); break;
            case SuiteId::records: sr.reports = verify_records(table, config.precision, cfg); break;
            case SuiteId::tail: sr.reports = run_tail_suite(config); break;
            case SuiteId::oracle: sr.reports = run_oracle_suite(table); break;
            case SuiteId::crt: sr.reports = run_crt_suite(config, table); break;
        }
        sr.finalize();
        result.suites.push_back(std::move(sr));
    }

    result.verdict = Verdict::pass;
    for (const auto& sr : result.suites) {
        for (const auto& rep : sr.reports) {
            if (rep.verdict == Verdict::fail) {
                result.verdict = Verdict::fail;
                if (result.first_failure.empty()) result.first_failure = rep.claim_id;
            }
        }
    }
    return result;
}

CertificateReport explain(const std::string& claim_id) {
    const auto dot = claim_id.find('.');
    if (dot == std::string::npos) throw UsageError("explain: unknown claim id '" + claim_id + "'");
    const std::string prefix = claim_id.substr(0, dot);
    const auto suite = suite_from_name(prefix);
    if (!suite) throw UsageError("explain: unknown claim id '" + claim_id + "'");

    RunConfig config;
    config.suites = {*suite};
    if (*suite == SuiteId::crt) {
        // crt.q<q>.<part>: run only the q in question
        if (claim_id.compare(dot + 1, 1, "q") != 0)
            throw UsageError("explain: unknown claim id '" + claim_id + "'");
        const auto next_dot = claim_id.find('.', dot + 2);
        const std::string digits = claim_id.substr(dot + 2, next_dot - dot - 2);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("explain: unknown claim id '" + claim_id + "'");
        config.crt_qs = {std::stoull(digits)};
    }

    const RunResult result = run(config);
    for (const auto& sr : result.suites)
        for (const auto& rep : sr.reports)
            if (rep.claim_id == claim_id) return rep;
    throw UsageError("explain: unknown claim id '" + claim_id + "'");
}

} // namespace primecert

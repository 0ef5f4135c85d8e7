#pragma once

#include <string>
#include <vector>

#include "primecert/interval.hpp"

namespace primecert {

enum class Verdict { pass, fail };

/// One checked inequality: what was compared, the values involved, and the
/// margin by which it held.  `exact` marks pure rational comparisons;
/// otherwise the comparison was between interval enclosures, and an
/// overlapping pair is always recorded as a failure, never as a pass.
struct Inequality {
    std::string description;
    std::string lhs;
    std::string rhs;
    Rational margin;      // > 0 iff verified strictly
    bool exact = true;
    Verdict verdict = Verdict::fail;
};

/// Machine-readable verdict record for one claim.
struct CertificateReport {
    std::string claim_id;
    std::string location;      // anchor into the manuscript being checked
    std::vector<Inequality> inequalities;
    std::vector<std::string> notes;
    Verdict verdict = Verdict::fail;   // pass iff every inequality passed
};

/// Accumulates inequality records for one claim.
class ReportBuilder {
public:
    ReportBuilder(std::string claim_id, std::string location);

    /// lhs < rhs by exact rational comparison.
    void exact_less(const std::string& desc, const Rational& lhs, const Rational& rhs);
    /// lhs > rhs by exact rational comparison.
    void exact_greater(const std::string& desc, const Rational& lhs, const Rational& rhs);
    /// Certified lhs < rhs: requires lhs.hi < rhs.
    void interval_less(const std::string& desc, const Interval& lhs, const Rational& rhs);
    /// Certified lhs > rhs: requires lhs.lo > rhs.
    void interval_greater(const std::string& desc, const Interval& lhs, const Rational& rhs);
    /// Generic verified fact with explicit rendering.
    void fact(const std::string& desc, bool ok, const std::string& lhs, const std::string& rhs);

    void note(const std::string& text);
    CertificateReport finish();

    bool all_passed() const { return all_passed_; }

private:
    void push(Inequality ineq);
    CertificateReport rep_;
    bool all_passed_ = true;
};

/// Suite identifiers in dependency order.
enum class SuiteId { constants, table1, ranges, records, tail, oracle, crt };

const char* suite_name(SuiteId id);

struct SuiteResult {
    SuiteId id = SuiteId::constants;
    std::vector<CertificateReport> reports;
    Verdict verdict = Verdict::fail;
    /// Reports sorted by claim_id and the verdict recomputed.
    void finalize();
};

enum class ReportFormat { text, machine };

/// Human-readable rendering.
std::string render_text(const std::vector<SuiteResult>& suites);
/// Deterministic JSON rendering: one record per checked inequality.
std::string render_machine(const std::vector<SuiteResult>& suites);

/// Writes content to path atomically (temp file + rename).
void write_atomically(const std::string& path, const std::string& content);

} // namespace primecert

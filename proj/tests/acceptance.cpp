// Acceptance suite: re-runs every verification gate end to end and prints
// one pass/fail line per criterion.  Exit status 0 iff all criteria hold.

#include <chrono>
#include <cstdio>
#include <string>

#include "primecert/certificates.hpp"
#include "primecert/densities.hpp"
#include "primecert/oracle.hpp"
#include "primecert/tail.hpp"

using namespace primecert;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title, double budget_seconds)
        : number_(number), title_(std::move(title)), budget_(budget_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            problems_ += (problems_.empty() ? "" : "; ") + what;
            ok_ = false;
        }
    }

    ~Criterion() {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (elapsed > budget_) {
            ok_ = false;
            problems_ += (problems_.empty() ? "" : "; ") + std::string("runtime ") +
                         std::to_string(elapsed) + "s over budget " + std::to_string(budget_) + "s";
        }
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok_ ? "PASS" : "FAIL", number_,
                    title_.c_str(), elapsed, problems_.empty() ? "" : " -- ",
                    problems_.c_str());
        std::fflush(stdout);
        if (!ok_) ++failures;
    }

private:
    int number_;
    std::string title_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    std::string problems_;
};

bool reports_pass(const std::vector<CertificateReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict != Verdict::pass) return false;
    return !reports.empty();
}

const Rational kPrecision(1, 1'000'000'000);

} // namespace

int main() {
    const PrimeTable table = PrimeTable::sieve(2'000'000);

    {
        Criterion c(1, "Table 1 reproduction: 17 rows, 34 exact inequalities, 17 orderings", 1.0);
        const auto reports = verify_table1(table);
        c.expect(reports_pass(reports), "a Table 1 claim failed");
        c.expect(reports.size() == 51, "expected 51 claims");
        std::size_t ratio_checks = 0, orderings = 0;
        for (const auto& r : reports) {
            if (r.claim_id.find(".order") != std::string::npos) ++orderings;
            for (const auto& q : r.inequalities)
                if (q.description.find("R_") == 0) ++ratio_checks;
        }
        c.expect(ratio_checks == 34, "expected 34 exact ratio comparisons");
        c.expect(orderings == 17, "expected 17 ordering checks");
    }

    {
        Criterion c(2, "range certificates: four displayed sums, W bounds, per-r chains", 5.0);
        const auto reports = verify_ranges(table);
        c.expect(reports_pass(reports), "a range claim failed");
        c.expect(reports.size() == 8, "expected 8 claims");
    }

    {
        Criterion c(3, "C enclosure inside the displayed interval at N = 1,999,993", 60.0);
        const ConstantEnclosure C = enclose_C(table);
        c.expect(C.interval.lo() > Rational::parse("0.773156636699192"),
                 "partial sum not above the displayed lower endpoint");
        c.expect(C.interval.hi() < Rational::parse("0.773157136700943"),
                 "partial sum plus tail not below the displayed upper endpoint");
    }

    {
        Criterion c(4, "record-gap arithmetic: digit counts and seven bound chains at 1e-9", 30.0);
        const auto reports = verify_records(table, kPrecision);
        c.expect(reports_pass(reports), "a record claim failed");
        for (const auto& r : reports)
            for (const auto& q : r.inequalities)
                c.expect(q.verdict == Verdict::pass && q.margin >= Rational(0),
                         "nonpositive margin in " + r.claim_id);
    }

    {
        Criterion c(5, "tail constants: eleven boundary inequalities plus the D(M) identity", 5.0);
        const auto constants = verify_tail_constants(kPrecision);
        c.expect(reports_pass(constants), "a tail constant failed");
        c.expect(constants.size() == 11, "expected 11 tail-constant claims");
        c.expect(verify_DM_identity(kPrecision).verdict == Verdict::pass, "D(M) identity failed");
        c.expect(verify_h_monotone(kPrecision).verdict == Verdict::pass, "h(t) analysis failed");
    }

    {
        Criterion c(6, "oracle equivalence: delta_m(i) equals residue census, 45 equalities", 60.0);
        std::size_t equalities = 0;
        for (std::size_t i = 0; i <= 8; ++i) {
            const OracleVerdict v = oracle_equals_formula(i, table);
            c.expect(v.pass, "mismatch at i = " + std::to_string(i) + ": " + v.first_mismatch);
            equalities += v.equalities_checked;
        }
        c.expect(equalities == 45, "expected 45 equalities, saw " + std::to_string(equalities));
    }

    {
        Criterion c(7, "threshold criterion consistency sweep: r <= 10, p_i <= 10^4", 60.0);
        const SweepResult s = threshold_consistency_sweep(10, 10'000, table);
        c.expect(s.mismatches.empty(),
                 std::to_string(s.mismatches.size()) + " sign mismatches");
        c.expect(s.checked >= 10'000, "sweep unexpectedly small");
    }

    {
        Criterion c(8, "CRT blocks at q in {13, 23, 53, 101} with scans where reachable", 120.0);
        for (uint64_t q : {13ull, 23ull, 53ull, 101ull}) {
            const CrtBlock blk = build_crt_block(q, table);
            c.expect(verify_crt_block(blk, table).verdict == Verdict::pass,
                     "block verification failed at q = " + std::to_string(q));

            const auto scan = scan_gap_region(blk, table, 2'000'000'000);
            if (q <= 23) {
                c.expect(scan.has_value(), "scan unexpectedly skipped at q = " + std::to_string(q));
                if (scan)
                    c.expect(BigInt(scan->min_gap) * (scan->prime_count - 1) < 4 * blk.P,
                             "min gap not below mean at q = " + std::to_string(q));
            } else {
                c.expect(!scan.has_value(), "scan should be skipped at q = " + std::to_string(q));
                const CertificateReport rep = report_gap_scan(blk, table, 2'000'000'000);
                bool notes_skip = false;
                for (const auto& n : rep.notes)
                    if (n.find("skipped") != std::string::npos) notes_skip = true;
                c.expect(notes_skip, "skip note missing at q = " + std::to_string(q));
            }
        }
    }

    if (failures == 0) std::printf("acceptance: all 8 criteria verified\n");
    else std::printf("acceptance: %d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}

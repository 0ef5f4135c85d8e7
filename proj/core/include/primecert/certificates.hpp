#pragma once

#include "primecert/logs.hpp"
#include "primecert/primes.hpp"
#include "primecert/report.hpp"

namespace primecert {

/// Named enclosure of one of the two constants entering the A(y) bounds.
/// B (Meissel-Mertens) is an axiom literal taken as published; C, the sum of
/// 1/(p(p-1)) over primes, is recomputed here from scratch.
struct ConstantEnclosure {
    char name = '?';        // 'B' or 'C'
    Interval interval;
    std::string method;
};

/// The published outward-rounded interval for B.
ConstantEnclosure axiom_B();

/// Exact partial sum of 1/(p(p-1)) over p <= n plus the telescoping tail
/// bound 1/n: C lies in [partial, partial + 1/n].
ConstantEnclosure enclose_C(const PrimeTable& table, uint64_t n = 1'999'993);

/// The constants suite: records B as an axiom input and checks the
/// recomputed C enclosure against its displayed decimal endpoints.
std::vector<CertificateReport> verify_constants(const PrimeTable& table);

/// All seventeen small-case rows (r = 3..19): exact ratio against the
/// displayed descent/ascent literals, the gap thresholds, gap facts, the
/// descent-before-ascent ordering, and an independent two-sided bound check.
std::vector<CertificateReport> verify_table1(const PrimeTable& table);

/// The two range certificates (20 <= r <= 30 at 15683 -> 15727 -> 15731 and
/// 31 <= r <= 47 at 31397 -> 31469 -> 31477): reproduces the four displayed
/// prime sums and both W bounds exactly, checks the displayed bound chains at
/// the extremal r, and confirms every intermediate r by exact evaluation.
std::vector<CertificateReport> verify_ranges(const PrimeTable& table);

/// Enclosure of the explicit n-th prime upper bound
///   n (ln n + ln ln n - 1 + (ln ln n - 2)/ln n),  valid for n > 688383.
Interval nth_prime_upper_bound(uint64_t n, const Rational& precision, const LogConfig& cfg = {});

/// The record inputs: a large-gap prime pair and a twin prime, reconstructed
/// from their defining formulas rather than stored digit strings.
struct RecordInput {
    std::string name;            // "LARGE_GAP" or "TWIN"
    BigInt value;                // s_L or s_T
    uint64_t gap = 0;            // 1,113,106 or 2
    unsigned long claimed_digits = 0;
};

RecordInput large_gap_record(const PrimeTable& table);   // 587 * 43103# / 2310 - 455704
RecordInput twin_record();                               // 504983334^8192 - 504983334^4096 - 1

/// The record-gap arithmetic: exact digit counts, the interval chains for
/// A(s_T), the n-th prime bounds, A at the prime bound, the sharp lower
/// bound at 10^18661, the final descent quotient, and the digit ordering.
std::vector<CertificateReport> verify_records(const PrimeTable& table, const Rational& precision,
                                              const LogConfig& cfg = {});

} // namespace primecert

#include <doctest.h>

#include <set>

#include "primecert/tail.hpp"

using namespace primecert;

namespace {
Rational rat(const char* s) { return Rational::parse(s); }
const Rational kPrec = Rational(1, 1'000'000'000);
} // namespace

TEST_CASE("tail parameters") {
    const TailParameters tp = tail_parameters(BigInt(8'600'001), kPrec);
    CHECK(tp.v.lo() > rat("15.96"));
    CHECK(tp.x.lo() > Rational(533'000));
    CHECK_THROWS_AS(tail_parameters(BigInt(8'600'000), kPrec), DomainError);
}

TEST_CASE("tail constants: all eleven boundary inequalities") {
    const auto reports = verify_tail_constants(kPrec);
    const std::set<std::string> expected = {
        "tail.v-lower",          "tail.x-lower",        "tail.logx-error",
        "tail.logxhalf-error",   "tail.theta-error-small", "tail.M-factor-bound",
        "tail.eps-small",        "tail.elementary-one", "tail.elementary-two",
        "tail.s63-boundary",     "tail.s64-boundary"};
    std::set<std::string> got;
    for (const auto& r : reports) {
        got.insert(r.claim_id);
        CHECK(r.verdict == Verdict::pass);
        for (const auto& q : r.inequalities) CHECK(q.margin > Rational(0));
    }
    CHECK(got == expected);
}

TEST_CASE("DM identity") {
    const CertificateReport r = verify_DM_identity(kPrec);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.claim_id == "tail.DM-identity");
}

TEST_CASE("h monotonicity") {
    const CertificateReport r = verify_h_monotone(kPrec);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("crt block q=13") {
    const PrimeTable t = PrimeTable::sieve(50000);
    const CrtBlock blk = build_crt_block(13, t);
    CHECK(blk.q_minus == 11);
    CHECK(blk.P == 30030);
    CHECK(blk.block_len == 21);
    CHECK(blk.a == 9439);
    CHECK(blk.block_start == 9439 + 2 * 30030 + 1);
    // the two special-case witnesses: m = q^- uses 2, m = q^- + 1 uses q
    CHECK(blk.witnesses[11 - 1] == 2);
    CHECK(blk.witnesses[12 - 1] == 13);
    // every element composite within (2P, 4P)
    CHECK(blk.block_start > 2 * blk.P);
    CHECK(blk.block_start + (blk.block_len - 1) < 4 * blk.P);

    const CertificateReport rep = verify_crt_block(blk, t);
    CHECK(rep.verdict == Verdict::pass);
}

TEST_CASE("crt block preconditions") {
    const PrimeTable t = PrimeTable::sieve(50000);
    CHECK_THROWS_AS(build_crt_block(14, t), DomainError);      // composite
    CHECK_THROWS_AS(build_crt_block(11, t), DomainError);      // q < 13
    CHECK_THROWS_AS(build_crt_block(103, t), ResourceError);   // beyond default cap
    CHECK_NOTHROW(build_crt_block(199, t, 200));               // raised cap
}

TEST_CASE("crt block q=199 at raised cap") {
    const PrimeTable t = PrimeTable::sieve(50000);
    const CrtBlock blk = build_crt_block(199, t, 200);
    CHECK(blk.q_minus == 197);
    CHECK(blk.block_len == 393);
    const CertificateReport rep = verify_crt_block(blk, t);
    CHECK(rep.verdict == Verdict::pass);
}

TEST_CASE("gap scan q=13") {
    const PrimeTable t = PrimeTable::sieve(50000);
    const CrtBlock blk = build_crt_block(13, t);
    const auto scan = scan_gap_region(blk, t, 2'000'000'000);
    REQUIRE(scan.has_value());
    CHECK(scan->prime_count == 9930);
    CHECK(scan->min_gap == 2);
    // pigeonhole
    CHECK(BigInt(scan->min_gap) * (scan->prime_count - 1) < 4 * blk.P);
    // a gap-scan cap below 8P suppresses the scan
    CHECK(!scan_gap_region(blk, t, 100000).has_value());

    const CertificateReport rep = report_gap_scan(blk, t, 2'000'000'000);
    CHECK(rep.verdict == Verdict::pass);
    const CertificateReport skipped = report_gap_scan(blk, t, 100000);
    CHECK(skipped.verdict == Verdict::pass);
    REQUIRE(!skipped.notes.empty());
    CHECK(skipped.notes[0].find("skipped") != std::string::npos);
}

TEST_CASE("two primes in (P, 2P]") {
    const PrimeTable t = PrimeTable::sieve(50000);
    const CrtBlock blk = build_crt_block(13, t);
    const CertificateReport rep = two_primes_in_P_2P(blk, t, 2'000'000'000, kPrec);
    CHECK(rep.verdict == Verdict::pass);
    // the direct count at q = 13 (oracle: 2814 primes)
    bool found_count = false;
    for (const auto& q : rep.inequalities)
        if (q.lhs == "2814") found_count = true;
    CHECK(found_count);
}

TEST_CASE("crt block rendering lists every witness") {
    const PrimeTable t = PrimeTable::sieve(50000);
    const CrtBlock blk = build_crt_block(13, t);
    const std::string text = render_crt_block(blk);
    CHECK(text.find("q = 13") != std::string::npos);
    CHECK(text.find("m = 21") != std::string::npos);
    CHECK(text.find("witness") != std::string::npos);
}

#include <doctest.h>

#include "primecert/certificates.hpp"
#include "primecert/densities.hpp"

using namespace primecert;

namespace {
Rational rat(const char* s) { return Rational::parse(s); }

bool all_pass(const std::vector<CertificateReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict != Verdict::pass) return false;
    return !reports.empty();
}
} // namespace

TEST_CASE("B axiom enclosure") {
    const ConstantEnclosure B = axiom_B();
    CHECK(B.name == 'B');
    CHECK(B.interval.lo() == rat("0.261497212847642"));
    CHECK(B.interval.hi() == rat("0.261497212847643"));
}

TEST_CASE("C enclosure toy case") {
    // single prime 2: partial sum 1/2, telescoping tail 1/2
    const PrimeTable t = PrimeTable::sieve(2);
    const ConstantEnclosure C = enclose_C(t, 2);
    CHECK(C.interval.lo() == Rational(1, 2));
    CHECK(C.interval.hi() == Rational(1));
}

TEST_CASE("C partial sum monotone in the cutoff") {
    const PrimeTable t = PrimeTable::sieve(10000);
    const ConstantEnclosure c100 = enclose_C(t, 100);
    const ConstantEnclosure c1000 = enclose_C(t, 1000);
    const ConstantEnclosure c10000 = enclose_C(t, 10000);
    CHECK(c100.interval.lo() < c1000.interval.lo());
    CHECK(c1000.interval.lo() < c10000.interval.lo());
    // every enclosure still contains the published interval's midpoint
    const Rational mid = (rat("0.773156636699192") + rat("0.773157136700943")) / 2;
    CHECK(c1000.interval.contains(mid));
    CHECK(c10000.interval.contains(mid));
    CHECK_THROWS_AS(enclose_C(t, 20000), DomainError);
}

TEST_CASE("constants suite at full cutoff" * doctest::timeout(120)) {
    const PrimeTable t = PrimeTable::sieve(2'000'000);
    const auto reports = verify_constants(t);
    CHECK(all_pass(reports));
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].claim_id == "constants.B.interval");
    CHECK(reports[1].claim_id == "constants.C.enclosure");

    const ConstantEnclosure C = enclose_C(t);
    CHECK(C.interval.lo() > rat("0.773156636699192"));
    CHECK(C.interval.hi() < rat("0.773157136700943"));
}

TEST_CASE("table 1 suite") {
    const PrimeTable t = PrimeTable::sieve(1200);
    const auto reports = verify_table1(t);
    CHECK(all_pass(reports));
    CHECK(reports.size() == 51);   // 17 rows x (descent, ascent, order)

    std::size_t literal_chains = 0, orderings = 0;
    for (const auto& r : reports) {
        if (r.claim_id.find(".order") != std::string::npos) ++orderings;
        for (const auto& q : r.inequalities)
            if (q.description.find("R_") == 0) ++literal_chains;
    }
    CHECK(literal_chains == 34);   // one exact ratio comparison per gap
    CHECK(orderings == 17);
    CHECK_THROWS_AS(verify_table1(PrimeTable::sieve(100)), DomainError);
}

TEST_CASE("table 1 row r=3 details") {
    const PrimeTable t = PrimeTable::sieve(1200);
    const auto reports = verify_table1(t);
    const auto it = std::find_if(reports.begin(), reports.end(), [](const CertificateReport& r) {
        return r.claim_id == "table1.r3.descent";
    });
    REQUIRE(it != reports.end());
    bool found_exact = false;
    for (const auto& q : it->inequalities)
        if (q.lhs.find("326/93") != std::string::npos) found_exact = true;
    CHECK(found_exact);
}

TEST_CASE("ranges suite") {
    const PrimeTable t = PrimeTable::sieve(31500);
    const auto reports = verify_ranges(t);
    CHECK(all_pass(reports));
    CHECK(reports.size() == 8);
    CHECK_THROWS_AS(verify_ranges(PrimeTable::sieve(1000)), DomainError);
}

TEST_CASE("nth prime upper bound") {
    const Rational prec = rat("1e-9");
    CHECK(nth_prime_upper_bound(8'599'999, prec).hi() < Rational(BigInt(152'960'196)));
    CHECK(nth_prime_upper_bound(8'600'000, prec).hi() < Rational(BigInt(152'960'215)));
    CHECK_THROWS_AS(nth_prime_upper_bound(688'383, prec), DomainError);
    CHECK_THROWS_AS(nth_prime_upper_bound(10, prec), DomainError);
    CHECK_NOTHROW(nth_prime_upper_bound(688'384, prec));
    // tightening the precision keeps the certified bound certified
    const Interval coarse = nth_prime_upper_bound(8'599'999, rat("1e-6"));
    const Interval fine = nth_prime_upper_bound(8'599'999, rat("1e-12"));
    CHECK(fine.hi() <= coarse.hi());
    CHECK(fine.lo() >= coarse.lo());
}

TEST_CASE("record inputs reconstructed from formulas") {
    const PrimeTable t = PrimeTable::sieve(43103);
    const RecordInput sL = large_gap_record(t);
    CHECK(sL.gap == 1'113'106);
    CHECK(decimal_digits(sL.value) == 18662);
    CHECK(decimal_digits(sL.value + sL.gap) == 18662);

    const RecordInput sT = twin_record();
    CHECK(sT.gap == 2);
    CHECK(decimal_digits(sT.value) == 71298);
    CHECK(sT.value > sL.value);
    // block: s_T between consecutive powers of ten per its digit count
    CHECK(sT.value >= pow10(71297));
    CHECK(sT.value < pow10(71298));
}

TEST_CASE("records suite at 1e-9" * doctest::timeout(120)) {
    const PrimeTable t = PrimeTable::sieve(43103);
    const auto reports = verify_records(t, rat("1e-9"));
    CHECK(all_pass(reports));
    CHECK(reports.size() == 10);
    // every margin strictly positive
    for (const auto& r : reports)
        for (const auto& q : r.inequalities) {
            CHECK(q.verdict == Verdict::pass);
            CHECK(q.margin >= Rational(0));
        }

    // rerunning yields identical reports, down to the rendered strings
    const auto again = verify_records(t, rat("1e-9"));
    REQUIRE(again.size() == reports.size());
    for (std::size_t k = 0; k < reports.size(); ++k) {
        CHECK(reports[k].claim_id == again[k].claim_id);
        REQUIRE(reports[k].inequalities.size() == again[k].inequalities.size());
        for (std::size_t j = 0; j < reports[k].inequalities.size(); ++j) {
            CHECK(reports[k].inequalities[j].lhs == again[k].inequalities[j].lhs);
            CHECK(reports[k].inequalities[j].margin == again[k].inequalities[j].margin);
        }
    }
}

TEST_CASE("table 1 ratios also satisfy the recomputed sandwich") {
    const PrimeTable t = PrimeTable::sieve(1300);
    const struct { unsigned r; uint64_t a; } rows[] = {{3, 13}, {10, 113}, {19, 1129}};
    for (const auto& row : rows) {
        const std::size_t i = t.index_of(row.a).value() - 1;
        const Rational exact = ratio(row.r, i, t);
        const RatioBounds b = ratio_bounds(row.r, i, t);
        CHECK(b.lower <= exact);
        CHECK(exact <= b.upper);
    }
}

#include <doctest.h>

#include <random>

#include "primecert/densities.hpp"
#include "primecert/oracle.hpp"

using namespace primecert;

namespace {

Rational rat(const char* s) { return Rational::parse(s); }

// independent oracle: e_m over explicit subset enumeration
Rational subset_e_m(const std::vector<Rational>& ws, unsigned m) {
    const std::size_t n = ws.size();
    Rational sum = (m == 0) ? Rational(1) : Rational(0);
    if (m == 0) return sum;
    std::vector<std::size_t> idx(m);
    // iterate m-subsets lexicographically
    for (std::size_t k = 0; k < m; ++k) idx[k] = k;
    if (m > n) return 0;
    while (true) {
        Rational prod = 1;
        for (std::size_t k = 0; k < m; ++k) prod *= ws[idx[k]];
        sum += prod;
        std::size_t k = m;
        while (k > 0 && idx[k - 1] == n - m + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return sum;
}

} // namespace

TEST_CASE("symmetric row basics") {
    SymmetricRow row(3);
    CHECK(row.value(0) == Rational(1));
    CHECK(row.value(1) == Rational(0));

    row.advance(Rational(1));
    CHECK(row.value(0) == Rational(1));
    CHECK(row.value(1) == Rational(1));
    CHECK(row.value(2) == Rational(0));

    row.advance(Rational(1, 2));
    row.advance(Rational(1, 4));
    CHECK(row.value(2) == Rational(7, 8));
    CHECK(row.value(3) == Rational(1, 8));
    CHECK(row.count() == 3);
    CHECK_THROWS_AS(row.advance(Rational(0)), DomainError);
    CHECK_THROWS_AS(row.advance(Rational(-1, 2)), DomainError);
}

TEST_CASE("symmetric row against subset enumeration") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> num(1, 9), den(1, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> ws;
        SymmetricRow row(5);
        for (int j = 0; j < 10; ++j) {
            ws.emplace_back(num(rng), den(rng));
            row.advance(ws.back());
        }
        for (unsigned m = 0; m <= 5; ++m) CHECK(row.value(m) == subset_e_m(ws, m));
    }
}

TEST_CASE("density recurrence and partition") {
    const PrimeTable t = PrimeTable::sieve(1000);
    CHECK(delta(0, 0, t) == Rational(1));
    CHECK(delta(1, 0, t) == Rational(0));
    CHECK(delta(1, 2, t) == Rational(1, 2));
    CHECK(delta(0, 3, t) == Rational(4, 15));
    CHECK(delta(5, 3, t) == Rational(0));   // m > i

    // partition and dual-route agreement in one pass up to i = 100, all m
    DensityRow rec(100);
    SymmetricRow sym(100);
    const PrimeTable big = PrimeTable::sieve(600);   // 109 primes
    for (std::size_t i = 1; i <= 100; ++i) {
        rec.advance_prime(big.prime(i));
        sym.advance_prime(big.prime(i));
        Rational total = 0;
        for (unsigned m = 0; m <= i; ++m) total += rec.value(m);
        CHECK(total == Rational(1));
        const Rational sf = rec.squarefree_factor();
        for (unsigned m = 0; m <= i; ++m) REQUIRE(rec.value(m) == sf * sym.value(m));
    }
}

TEST_CASE("lemma 3.2 sandwich for all r <= 20, r <= i <= 200") {
    const PrimeTable t = PrimeTable::sieve(1300);
    SymmetricRow row(20);
    Rational A = 0;                 // W_i
    std::vector<Rational> W{0};     // W_0..W_19 as they become available
    for (std::size_t i = 1; i <= 200; ++i) {
        row.advance_prime(t.prime(i));
        A += Rational(1, static_cast<long>(t.prime(i) - 1));
        if (W.size() < 20) W.push_back(A);
        for (unsigned r = 1; r <= std::min<std::size_t>(20, i); ++r) {
            const Rational R = row.ratio(r);
            REQUIRE(Rational(static_cast<long>(r)) / A <= R);
            REQUIRE(R <= Rational(static_cast<long>(r)) / (A - W[r - 1]));
        }
    }
}

TEST_CASE("d_k values and adjacent comparisons") {
    const PrimeTable t = PrimeTable::sieve(100);
    CHECK(density_dk(1, 1, t) == Rational(1, 2));
    // r = 3 row: descent at 13 -> 17, ascent at 17 -> 19
    const std::size_t i13 = t.index_of(13).value();
    const std::size_t i17 = t.index_of(17).value();
    const std::size_t i19 = t.index_of(19).value();
    CHECK(density_dk(4, i17, t) < density_dk(4, i13, t));
    CHECK(density_dk(4, i19, t) > density_dk(4, i17, t));
    CHECK_THROWS_AS(density_dk(0, 1, t), DomainError);
    CHECK_THROWS_AS(density_dk(1, 0, t), DomainError);
}

TEST_CASE("ratio") {
    const PrimeTable t = PrimeTable::sieve(2000);
    CHECK(ratio(1, 1, t) == Rational(1));   // E_0/E_1 = 1/w_1

    // R_3(13^-) = R_3 at i = index(13) - 1; exact value 326/93
    const std::size_t i = t.index_of(13).value() - 1;
    const Rational r3 = ratio(3, i, t);
    CHECK(r3 == Rational(326, 93));
    CHECK(r3 > Rational(3));
    CHECK(r3 < rat("3.506"));

    const Rational r19 = ratio(19, t.index_of(1129).value() - 1, t);
    CHECK(r19 < rat("20.742"));

    CHECK_THROWS_AS(ratio(5, 4, t), UndefinedRatioError);
}

TEST_CASE("threshold criterion") {
    const PrimeTable t = PrimeTable::sieve(2000);
    {
        const ThresholdVerdict v = threshold_check(3, t.index_of(13).value(), t);
        CHECK(v.verdict == Direction::descent);
        CHECK(v.gap_plus_one == 5);
    }
    {
        const ThresholdVerdict v = threshold_check(8, t.index_of(113).value(), t);
        CHECK(v.verdict == Direction::descent);
        CHECK(v.gap_plus_one == 15);
    }
    {
        const ThresholdVerdict v = threshold_check(3, t.index_of(17).value(), t);
        CHECK(v.verdict == Direction::ascent);
    }
    // r = 1 at the gap 2 -> 3: delta_1(0) = 0, criterion not applicable
    CHECK_THROWS_AS(threshold_check(1, 1, t), UndefinedRatioError);
}

TEST_CASE("ratio bounds sandwich") {
    const PrimeTable t = PrimeTable::sieve(16000);
    {
        // lower bound at r = 20, i = index(15727): 20/A(15727) > 6.053
        const RatioBounds b = ratio_bounds(20, t.index_of(15727).value(), t);
        CHECK(b.lower > rat("6.053"));
    }
    {
        // upper bound at r = 30, i just below 15683: < 43.409
        const RatioBounds b = ratio_bounds(30, t.index_of(15683).value() - 1, t);
        CHECK(b.upper < rat("43.409"));
    }
    {
        // r = 1: W_0 = 0 collapses the two bounds
        const RatioBounds b = ratio_bounds(1, 5, t);
        CHECK(b.lower == b.upper);
        CHECK(b.lower == ratio(1, 5, t));
    }
    CHECK_THROWS_AS(ratio_bounds(7, 6, t), UndefinedRatioError);

    // sandwich across a grid
    const PrimeTable small = PrimeTable::sieve(1300);   // > 200 primes
    for (unsigned r = 1; r <= 20; ++r)
        for (std::size_t i = r; i <= 200; i += 13) {
            const RatioBounds b = ratio_bounds(r, i, small);
            const Rational exact = ratio(r, i, small);
            CHECK(b.lower <= exact);
            CHECK(exact <= b.upper);
        }
}

TEST_CASE("newton log-concavity of symmetric rows") {
    const PrimeTable t = PrimeTable::sieve(600);
    SymmetricRow row(12);
    for (std::size_t i = 1; i <= 60; ++i) {
        row.advance_prime(t.prime(i));
        for (unsigned r = 1; r + 1 <= std::min<std::size_t>(12, i); ++r) {
            const Rational e_prev = row.value(r - 1), e = row.value(r), e_next = row.value(r + 1);
            CHECK(e_prev * e_next <= e * e);
        }
    }
}

TEST_CASE("threshold consistency sweep, small") {
    const PrimeTable t = PrimeTable::sieve(2100);
    const SweepResult s = threshold_consistency_sweep(5, 2000, t);
    CHECK(s.mismatches.empty());
    CHECK(s.checked > 1000);
}

TEST_CASE("residue census") {
    const PrimeTable t = PrimeTable::sieve(30);
    {
        const ResidueCensus c = census(0, t);
        CHECK(c.modulus == 1);
        CHECK(c.counts == std::vector<uint64_t>{1});
    }
    {
        const ResidueCensus c = census(1, t);
        CHECK(c.modulus == 2);
        CHECK(c.counts == std::vector<uint64_t>{1, 1});
    }
    {
        const ResidueCensus c = census(2, t);
        CHECK(c.modulus == 6);
        CHECK(c.counts == std::vector<uint64_t>{2, 3, 1});
    }
    {
        const ResidueCensus c = census(3, t);
        CHECK(c.modulus == 30);
        CHECK(c.counts[0] == 8);
    }
    CHECK_THROWS_AS(census(9, t), ResourceError);
}

TEST_CASE("census strategies agree") {
    const PrimeTable t = PrimeTable::sieve(30);
    for (std::size_t i = 0; i <= 6; ++i) {
        const ResidueCensus walk = census(i, t);
        const ResidueCensus incl = census_inclusion_exclusion(i, t);
        CHECK(walk.modulus == incl.modulus);
        CHECK(walk.counts == incl.counts);
        uint64_t total = 0;
        for (uint64_t c : walk.counts) total += c;
        CHECK(total == walk.modulus);
    }
}

TEST_CASE("oracle equals formula") {
    const PrimeTable t = PrimeTable::sieve(30);
    for (std::size_t i : {0u, 2u, 5u}) {
        const OracleVerdict v = oracle_equals_formula(i, t);
        CHECK(v.pass);
        CHECK(v.equalities_checked == i + 1);
    }
}

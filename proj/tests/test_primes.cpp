#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "primecert/primes.hpp"

using namespace primecert;

namespace {

// deliberately different implementation from the library's segmented sieve
std::vector<uint64_t> reference_sieve(uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<uint64_t> primes;
    for (uint64_t n = 2; n <= limit; ++n) {
        if (composite[n]) continue;
        primes.push_back(n);
        for (uint64_t m = n * n; m <= limit; m += n) composite[m] = true;
    }
    return primes;
}

bool trial_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

TEST_CASE("sieve small") {
    const PrimeTable t = PrimeTable::sieve(20);
    CHECK(t.primes() == std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(t.prime(1) == 2);
    CHECK(t.prime(8) == 19);
    CHECK_THROWS_AS(t.prime(0), DomainError);
    CHECK_THROWS_AS(t.prime(9), DomainError);
    CHECK_THROWS_AS(PrimeTable::sieve(1), DomainError);
    CHECK_THROWS_AS(PrimeTable::sieve(200, 100), ResourceError);
}

TEST_CASE("sieve correct by exhaustive trial division to 10^4") {
    const PrimeTable t = PrimeTable::sieve(10000);
    std::size_t idx = 0;
    for (uint64_t n = 2; n <= 10000; ++n) {
        if (trial_prime(n)) {
            REQUIRE(idx < t.size());
            CHECK(t.prime(idx + 1) == n);
            ++idx;
        }
    }
    CHECK(idx == t.size());
}

TEST_CASE("pi(2e6) against an independent sieve") {
    const PrimeTable t = PrimeTable::sieve(2'000'000);
    const auto ref = reference_sieve(2'000'000);
    CHECK(t.size() == ref.size());
    CHECK(t.size() == 148933);
    CHECK(t.pi(1'999'993) == 148933);
    CHECK(t.prime(148933) == 1'999'993);
    // spot compare across the range
    for (std::size_t i = 0; i < ref.size(); i += 1031) CHECK(t.prime(i + 1) == ref[i]);
}

TEST_CASE("gaps") {
    const PrimeTable t = PrimeTable::sieve(31500);
    CHECK(t.gap(1) == 1);   // 2 -> 3
    CHECK(t.gap(2) == 2);   // 3 -> 5
    CHECK(t.gap(t.index_of(15683).value()) == 44);
    CHECK(t.gap(t.index_of(1129).value()) == 22);
    CHECK(t.gap(t.index_of(31469).value()) == 8);
    for (std::size_t i = 2; i + 1 <= t.size(); i += 97) CHECK(t.gap(i) >= 2);
    CHECK_THROWS_AS(t.gap(t.size()), DomainError);
}

TEST_CASE("weights and prefix sums") {
    const PrimeTable t = PrimeTable::sieve(200);
    const WeightVector w(t, 10);
    CHECK(w.prefix(0) == Rational(0));
    CHECK(w.weight(1) == Rational(1));
    CHECK(w.weight(2) == Rational(1, 2));
    CHECK(w.prefix(4) == Rational(23, 12));
    for (std::size_t j = 2; j <= 10; ++j) CHECK(w.weight(j) < w.weight(j - 1));
    for (std::size_t n = 1; n <= 10; ++n) CHECK(w.prefix(n) > w.prefix(n - 1));

    CHECK(weight_prefix(t, 0) == Rational(0));
    CHECK(weight_prefix(t, 4) == Rational(23, 12));
    for (std::size_t n = 0; n <= 10; ++n) CHECK(weight_prefix(t, n) == w.prefix(n));
    CHECK_THROWS_AS(weight_prefix(t, t.size() + 1), DomainError);
}

TEST_CASE("restricted sums") {
    const PrimeTable t = PrimeTable::sieve(31500);
    CHECK(restricted_sum(t, 2) == Rational(1));
    CHECK(restricted_sum(t, 2, /*strict=*/true) == Rational(0));
    CHECK(restricted_sum(t, 15683, true) > Rational::parse("3.303755162423773"));
    CHECK(restricted_sum(t, 15683) < Rational::parse("3.303818929800384"));
    CHECK(restricted_sum(t, 31397, true) > Rational::parse("3.372584257226677"));
    CHECK(restricted_sum(t, 31397) < Rational::parse("3.372616108417913"));
    CHECK(weight_prefix(t, 29) < Rational::parse("2.612642166507777"));
    CHECK(weight_prefix(t, 46) < Rational::parse("2.721441010945543"));
    // A(y) = W_{pi(y)} for arbitrary cutoffs, prime or not
    for (uint64_t y : {2ull, 3ull, 4ull, 100ull, 101ull, 15683ull, 15684ull, 30000ull})
        CHECK(restricted_sum(t, y) == weight_prefix(t, t.pi(y)));
    CHECK_THROWS_AS(restricted_sum(t, 40000), DomainError);
}

TEST_CASE("primorial") {
    const PrimeTable t = PrimeTable::sieve(100);
    CHECK(primorial(t, 2) == 2);
    CHECK(primorial(t, 13) == 30030);
    CHECK_THROWS_AS(primorial(t, 15), DomainError);
    CHECK_THROWS_AS(primorial(t, 1000), DomainError);
    const BigInt p43 = primorial(t, 43);
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                       37ull, 41ull, 43ull})
        CHECK(p43 % q == 0);
    for (uint64_t q : {47ull, 53ull, 97ull}) CHECK(p43 % q != 0);
}

TEST_CASE("record-scale digit counts") {
    const PrimeTable t = PrimeTable::sieve(43103);
    const BigInt p = primorial(t, 43103);
    CHECK(p % 2310 == 0);
    const BigInt s_L = 587 * (p / 2310) - 455704;
    CHECK(decimal_digits(s_L) == 18662);
}

TEST_CASE("theta as log of primorial") {
    const PrimeTable t = PrimeTable::sieve(100);
    // theta(13) = ln 30030 = 10.309952...
    const Interval th = theta_enclosure(t, 13, Rational::parse("1e-9"));
    CHECK(th.contains(Rational::parse("10.30995216097737596063")));
    CHECK(theta_enclosure(t, 14, Rational(1)).contains(Rational::parse("10.30995216097737596063")));
}

TEST_CASE("segmented scan agrees with direct sieve") {
    const PrimeTable base = PrimeTable::sieve(2000);
    std::vector<uint64_t> got;
    scan_primes(100000, 150000, base, [&](uint64_t p) { got.push_back(p); });
    std::vector<uint64_t> want;
    for (uint64_t p : reference_sieve(150000))
        if (p >= 100000) want.push_back(p);
    CHECK(got == want);

    got.clear();
    scan_primes(1, 30, base, [&](uint64_t p) { got.push_back(p); });
    CHECK(got == std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});

    CHECK_THROWS_AS(scan_primes(1, 100'000'000, PrimeTable::sieve(100), [](uint64_t) {}),
                    ResourceError);
}

TEST_CASE("prime cache round-trip and revalidation") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "primecert_cache_test";
    fs::create_directories(dir);
    const fs::path file = dir / "primes_10000.bin";

    const PrimeTable t = PrimeTable::sieve(10000);
    REQUIRE(save_prime_cache(t, file));

    auto loaded = load_prime_cache(file, 10000);
    REQUIRE(loaded.has_value());
    CHECK(loaded->primes() == t.primes());
    CHECK(loaded->limit() == 10000);

    CHECK(!load_prime_cache(file, 20000).has_value());       // limit mismatch
    CHECK(!load_prime_cache(dir / "missing.bin", 10000).has_value());

    // flip one payload byte: checksum must reject
    {
        std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(40);
        char c;
        f.seekg(40);
        f.get(c);
        f.seekp(40);
        f.put(static_cast<char>(c ^ 0x01));
    }
    CHECK(!load_prime_cache(file, 10000).has_value());
    fs::remove_all(dir);
}

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "primecert/interval.hpp"

namespace primecert {

/// Complete table of primes p_1 = 2, p_2 = 3, ... up to a sieve limit.
/// Indexing is 1-based throughout, matching the usual p_i convention.
class PrimeTable {
public:
    static constexpr uint64_t kDefaultLimitCap = 100'000'000;

    /// Segmented sieve of Eratosthenes up to `limit` (inclusive).
    static PrimeTable sieve(uint64_t limit, uint64_t limit_cap = kDefaultLimitCap);

    uint64_t limit() const { return limit_; }
    std::size_t size() const { return primes_.size(); }

    /// p_i, 1-based.
    uint64_t prime(std::size_t i) const;

    /// g_i = p_{i+1} - p_i.
    uint64_t gap(std::size_t i) const;

    /// pi(y): number of primes <= y.  Requires y <= limit.
    std::size_t pi(uint64_t y) const;

    /// 1-based index of p if p is in the table.
    std::optional<std::size_t> index_of(uint64_t p) const;

    const std::vector<uint64_t>& primes() const { return primes_; }

private:
    PrimeTable(std::vector<uint64_t> primes, uint64_t limit)
        : primes_(std::move(primes)), limit_(limit) {}
    friend std::optional<PrimeTable> load_prime_cache(const std::filesystem::path&, uint64_t);
    std::vector<uint64_t> primes_;
    uint64_t limit_ = 0;
};

/// w_j = 1/(p_j - 1) and prefix sums W_N for the leading weights.  Only a
/// short prefix is ever materialized; large restricted sums go through the
/// balanced summation below.
class WeightVector {
public:
    WeightVector(const PrimeTable& table, std::size_t count);

    std::size_t size() const { return weights_.size(); }
    const Rational& weight(std::size_t j) const;        // w_j, 1-based
    const Rational& prefix(std::size_t n) const;        // W_N, N = 0..size

private:
    std::vector<Rational> weights_;
    std::vector<Rational> prefix_;   // prefix_[n] = W_n, prefix_[0] = 0
};

/// Exact W_N = sum of 1/(p_j - 1) for j <= N, by balanced reduction.
Rational weight_prefix(const PrimeTable& table, std::size_t n);

/// Exact A(y) = sum of 1/(p - 1) over p <= y (or p < y when strict).
Rational restricted_sum(const PrimeTable& table, uint64_t y, bool strict = false);

/// Exact sum of term(p_j) for j in [1, count]; term yields (num, den) with
/// den > 0.  Balanced reduction keeps the intermediate fractions shallow.
Rational exact_prime_sum(const PrimeTable& table, std::size_t count,
                         const std::function<std::pair<BigInt, BigInt>(uint64_t)>& term);

/// Primorial: product of all primes <= q.  q itself must be prime.
BigInt primorial(const PrimeTable& table, uint64_t q);

/// ln of the primorial of the largest prime <= x, i.e. the Chebyshev
/// theta function, enclosed to `precision`.  Desk scale only.
Interval theta_enclosure(const PrimeTable& table, uint64_t x, const Rational& precision);

/// Streams every prime in [lo, hi] in increasing order through `fn`,
/// sieving by segments.  Requires base.limit()^2 >= hi.
void scan_primes(uint64_t lo, uint64_t hi, const PrimeTable& base,
                 const std::function<void(uint64_t)>& fn);

/// Optional on-disk prime cache: little-endian 64-bit gap deltas behind a
/// checksummed header.  Never a source of truth; loads are revalidated by
/// checksum plus spot trial-division, and any mismatch discards the file.
bool save_prime_cache(const PrimeTable& table, const std::filesystem::path& path);
std::optional<PrimeTable> load_prime_cache(const std::filesystem::path& path, uint64_t limit);

} // namespace primecert

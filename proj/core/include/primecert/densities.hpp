#pragma once

#include <vector>

#include "primecert/primes.hpp"

namespace primecert {

/// Prefix row E_0(i)..E_r(i) of elementary symmetric values of the weights
/// consumed so far.  Stored as integer numerators over one shared
/// denominator, so an advance costs r_cap big-by-small multiply-adds and
/// never a gcd; accessors reduce on demand.
class SymmetricRow {
public:
    explicit SymmetricRow(unsigned r_cap);

    /// Consumes the next weight: E_m <- E_m + w * E_{m-1}, applied from
    /// m = r_cap down to 1 so the new weight enters each entry exactly once.
    void advance(const Rational& w);

    /// Convenience for w = 1/(p - 1).
    void advance_prime(uint64_t p);

    unsigned r_cap() const { return static_cast<unsigned>(scaled_.size()) - 1; }
    std::size_t count() const { return count_; }         // i, weights consumed

    /// E_m(i), exact and in lowest terms.
    Rational value(unsigned m) const;

    /// R_r(i) = E_{r-1}(i)/E_r(i); UndefinedRatioError when E_r(i) = 0.
    Rational ratio(unsigned r) const;

    /// Integer comparison of R_r(i) with an integer threshold, avoiding the
    /// intermediate fraction: sign of E_{r-1}(i) - t * E_r(i).
    int compare_ratio(unsigned r, uint64_t t) const;

private:
    std::vector<BigInt> scaled_;   // scaled_[m] = E_m * denom_
    BigInt denom_ = 1;
    std::size_t count_ = 0;
};

/// Densities delta_0(i)..delta_cap(i) of divisibility by exactly m of the
/// first i primes, maintained by the one-prime recurrence
/// delta_m(i) = (1 - 1/p_i) delta_m(i-1) + (1/p_i) delta_{m-1}(i-1).
/// This is the recurrence route; the symmetric route is squarefree_factor
/// times E_m, and the two must agree exactly.
class DensityRow {
public:
    explicit DensityRow(unsigned m_cap);

    void advance_prime(uint64_t p);

    std::size_t count() const { return count_; }
    unsigned m_cap() const { return static_cast<unsigned>(deltas_.size()) - 1; }
    const Rational& value(unsigned m) const;

    /// prod_{j<=i} (p_j - 1)/p_j.
    const Rational& squarefree_factor() const { return squarefree_; }

private:
    std::vector<Rational> deltas_;
    Rational squarefree_ = 1;
    std::size_t count_ = 0;
};

/// Exact delta_m(i), computed by both routes with an internal agreement
/// check.  m > i gives 0.
Rational delta(unsigned m, std::size_t i, const PrimeTable& table);

/// Exact d_k(p_i): density of integers whose k-th smallest prime divisor is
/// p_i.  Equals delta_{k-1}(i-1)/p_i.  Requires k >= 1, i >= 1.
Rational density_dk(unsigned k, std::size_t i, const PrimeTable& table);

/// Exact R_r(i) = delta_{r-1}(i)/delta_r(i) = E_{r-1}(i)/E_r(i); requires i >= r.
Rational ratio(unsigned r, std::size_t i, const PrimeTable& table);

enum class Direction { descent, ascent, equal };

/// Outcome of the threshold criterion at the gap p_i -> p_{i+1}: the sign of
/// d_{r+1}(p_{i+1}) - d_{r+1}(p_i) equals the sign of R_r(i-1) - (g_i + 1),
/// decided by exact rational comparison with no tolerance.
struct ThresholdVerdict {
    unsigned r = 0;
    std::size_t i = 0;
    Rational ratio;                 // R_r(i-1)
    uint64_t gap_plus_one = 0;      // g_i + 1
    Direction verdict = Direction::equal;
};

ThresholdVerdict threshold_check(unsigned r, std::size_t i, const PrimeTable& table);

/// The two-sided symmetric-polynomial bounds
/// r/A(p_i) <= R_r(i) <= r/(A(p_i) - W_{r-1}), exact, with an internal
/// assertion that the exact ratio lies inside.
struct RatioBounds {
    Rational lower;
    Rational upper;
};

RatioBounds ratio_bounds(unsigned r, std::size_t i, const PrimeTable& table);

/// Sign-consistency sweep of the threshold criterion: for every r <= r_max
/// and every gap p_i -> p_{i+1} with p_i <= p_max and i - 1 >= r, compares
/// the verdict with the sign of the exact first difference of d_{r+1}.
/// Returns the number of gaps checked; mismatches lists any disagreement.
struct SweepResult {
    std::size_t checked = 0;
    std::vector<std::pair<unsigned, std::size_t>> mismatches;   // (r, i)
};

SweepResult threshold_consistency_sweep(unsigned r_max, uint64_t p_max, const PrimeTable& table);

} // namespace primecert

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primecert/primes.hpp"

namespace primecert {

/// Ground-truth census of residues modulo prod_{j<=i} p_j, classified by how
/// many of the first i primes divide them.  Divisibility by those primes is
/// periodic with exactly this period, so counts[m] / modulus is the natural
/// density delta_m(i) with no limiting process involved.
struct ResidueCensus {
    std::size_t i = 0;
    uint64_t modulus = 1;
    std::vector<uint64_t> counts;   // counts[m], m = 0..i
};

/// Walks every residue class and counts prime divisors directly.
/// i <= cap (default 8: modulus 9,699,690) keeps the walk desk-scale.
ResidueCensus census(std::size_t i, const PrimeTable& table, std::size_t cap = 8);

/// Same counts by subset inclusion-exclusion over the 2^i divisor patterns;
/// an independent route that must agree with the walk.
ResidueCensus census_inclusion_exclusion(std::size_t i, const PrimeTable& table,
                                         std::size_t cap = 8);

/// Exact equality check counts[m]/modulus == delta_m(i) for every m <= i.
struct OracleVerdict {
    bool pass = true;
    std::size_t equalities_checked = 0;
    std::string first_mismatch;   // empty when pass
};

OracleVerdict oracle_equals_formula(std::size_t i, const PrimeTable& table, std::size_t cap = 8);

} // namespace primecert

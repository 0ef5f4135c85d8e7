#include "primecert/oracle.hpp"

#include "primecert/densities.hpp"

namespace primecert {

namespace {

uint64_t census_modulus(std::size_t i, const PrimeTable& table, std::size_t cap) {
    if (i > cap)
        throw ResourceError("census: i = " + std::to_string(i) + " beyond enumeration cap " +
                            std::to_string(cap));
    if (i > table.size()) throw DomainError("census: table too small");
    uint64_t mod = 1;
    for (std::size_t j = 1; j <= i; ++j) mod *= table.prime(j);
    return mod;
}

} // namespace

ResidueCensus census(std::size_t i, const PrimeTable& table, std::size_t cap) {
    ResidueCensus c;
    c.i = i;
    c.modulus = census_modulus(i, table, cap);
    c.counts.assign(i + 1, 0);

    std::vector<uint64_t> ps;
    for (std::size_t j = 1; j <= i; ++j) ps.push_back(table.prime(j));
    for (uint64_t n = 0; n < c.modulus; ++n) {
        std::size_t m = 0;
        for (uint64_t p : ps)
            if (n % p == 0) ++m;
        ++c.counts[m];
    }
    return c;
}

ResidueCensus census_inclusion_exclusion(std::size_t i, const PrimeTable& table, std::size_t cap) {
    ResidueCensus c;
    c.i = i;
    c.modulus = census_modulus(i, table, cap);
    c.counts.assign(i + 1, 0);

    std::vector<uint64_t> ps;
    for (std::size_t j = 1; j <= i; ++j) ps.push_back(table.prime(j));

    // residues divisible by exactly the primes in T:
    //   sum over S >= T of (-1)^(|S|-|T|) * modulus / prod(S)
    // accumulated per subset into counts[|T|].
    const std::size_t n_subsets = std::size_t{1} << i;
    std::vector<int64_t> exact(n_subsets, 0);
    for (std::size_t s = 0; s < n_subsets; ++s) {
        uint64_t prod = 1;
        for (std::size_t b = 0; b < i; ++b)
            if (s & (std::size_t{1} << b)) prod *= ps[b];
        const int64_t superset_count = static_cast<int64_t>(c.modulus / prod);
        // distribute to every subset T of s with alternating sign
        for (std::size_t t = s;; t = (t - 1) & s) {
            const int bits = __builtin_popcountll(s) - __builtin_popcountll(t);
            exact[t] += (bits % 2 == 0) ? superset_count : -superset_count;
            if (t == 0) break;
        }
    }
    for (std::size_t t = 0; t < n_subsets; ++t) {
        if (exact[t] < 0) throw Error("census: inclusion-exclusion produced a negative count");
        c.counts[static_cast<std::size_t>(__builtin_popcountll(t))] +=
            static_cast<uint64_t>(exact[t]);
    }
    return c;
}

OracleVerdict oracle_equals_formula(std::size_t i, const PrimeTable& table, std::size_t cap) {
    const ResidueCensus c = census(i, table, cap);
    OracleVerdict v;
    for (unsigned m = 0; m <= i; ++m) {
        const Rational from_census(BigInt(c.counts[m]), BigInt(c.modulus));
        const Rational from_formula = delta(m, i, table);
        ++v.equalities_checked;
        if (from_census != from_formula) {
            v.pass = false;
            v.first_mismatch = "delta_" + std::to_string(m) + "(" + std::to_string(i) +
                               "): census " + from_census.str() + " vs formula " +
                               from_formula.str();
            return v;
        }
    }
    return v;
}

} // namespace primecert

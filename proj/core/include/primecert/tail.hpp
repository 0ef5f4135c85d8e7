#pragma once

#include <optional>

#include "primecert/logs.hpp"
#include "primecert/primes.hpp"
#include "primecert/report.hpp"

namespace primecert {

/// The boundary parameters of the tail argument: r >= 8,600,001, v = ln r,
/// x = 0.99 r / ln r.  The invariants v > 15.96 and x > 533,000 are
/// re-derived by enclosure, not assumed.
struct TailParameters {
    BigInt r;
    Interval v;   // encloses ln r
    Interval x;   // encloses 0.99 r / ln r
};

TailParameters tail_parameters(const BigInt& r, const Rational& precision,
                               const LogConfig& cfg = {});

/// The eleven displayed boundary inequalities of the tail section, each
/// verified at its boundary value together with an explicit monotonicity
/// witness (a derivative sign or an algebraic comparison, itself checked
/// exactly or by enclosure).  One report per inequality.
std::vector<CertificateReport> verify_tail_constants(const Rational& precision,
                                                     const LogConfig& cfg = {});

/// The partial-fraction identity behind the average-gap count,
///   D(M) - 4/M = 2((9 - 10L)M - (10L + 11)) / (5M(M-1)(M - L - 1.1)),
/// checked as an exact polynomial identity in (M, L) on an over-determined
/// sample grid, plus the downstream bounds at M = 20.
CertificateReport verify_DM_identity(const Rational& precision, const LogConfig& cfg = {});

/// Monotonicity analysis of h(t) = 0.2t - ln t + 1 - (ln t - 2)/t at and
/// beyond t = 15.96, plus the n-th prime spot check it feeds.
CertificateReport verify_h_monotone(const Rational& precision, const LogConfig& cfg = {});

/// A run of 2 q^- - 1 consecutive composites engineered by simultaneous
/// congruences, sitting strictly inside (2P, 4P) for P the primorial of q.
struct CrtBlock {
    uint64_t q = 0;
    uint64_t q_minus = 0;
    BigInt P;
    std::vector<std::pair<uint64_t, uint64_t>> residues;   // (p, a_p)
    BigInt a;                                              // CRT solution in [0, P)
    BigInt block_start;                                    // a + 2P + 1
    uint64_t block_len = 0;                                // 2 q^- - 1
    std::vector<uint64_t> witnesses;                       // per m = 1..block_len
};

/// Builds and fully verifies the block.  q must be prime, 13 <= q <= q_cap.
CrtBlock build_crt_block(uint64_t q, const PrimeTable& table, uint64_t q_cap = 101);

/// Exhaustive verification of the block: the five-case witness analysis,
/// per-element compositeness (promised witness and independent trial
/// division), containment in (2P, 4P), and the surrounding-gap bound.
CertificateReport verify_crt_block(const CrtBlock& block, const PrimeTable& table);

/// Scan of the primes in (4P, 8P]: count, minimum gap, and the pigeonhole
/// comparison of the minimum against the mean.
struct GapScan {
    BigInt lo, hi;              // 4P, 8P
    uint64_t prime_count = 0;   // N
    uint64_t min_gap = 0;       // G_+
    BigInt first_prime, last_prime;
};

/// nullopt when 8P exceeds scan_cap; the caller reports the skip.
std::optional<GapScan> scan_gap_region(const CrtBlock& block, const PrimeTable& base,
                                       uint64_t scan_cap);

CertificateReport report_gap_scan(const CrtBlock& block, const PrimeTable& base,
                                  uint64_t scan_cap);

/// (P, 2P] contains at least two primes: direct count at desk scale, plus
/// the displayed symbolic chain at L = ln P = 20.
CertificateReport two_primes_in_P_2P(const CrtBlock& block, const PrimeTable& base,
                                     uint64_t scan_cap, const Rational& precision,
                                     const LogConfig& cfg = {});

/// Serializes the block with its witnesses as a plain text artifact.
std::string render_crt_block(const CrtBlock& block);

} // namespace primecert

#include "primecert/tail.hpp"

#include <algorithm>
#include <sstream>

namespace primecert {

namespace {

Rational rat(const char* s) { return Rational::parse(s); }

// eps as a function of l = ln y, exact in l.
Rational eps_at_log(const Rational& l) {
    const Rational l2 = l * l;
    return Rational(1) / (10 * l2) + Rational(4) / (15 * l2 * l);
}

// 1/(2 ln^2 x) as an interval from an enclosure of ln x > 0.
Interval half_inv_log_sq(const Interval& L) {
    return Rational(1) / (L.square_positive() * Rational(2));
}

} // namespace

TailParameters tail_parameters(const BigInt& r, const Rational& precision, const LogConfig& cfg) {
    if (r < 8'600'001) throw DomainError("tail_parameters: r must be >= 8,600,001");
    TailParameters tp;
    tp.r = r;
    tp.v = log_enclosure(Rational(r), precision, cfg);
    tp.x = Interval::point(rat("0.99") * Rational(r)) / tp.v;
    return tp;
}

std::vector<CertificateReport> verify_tail_constants(const Rational& precision,
                                                     const LogConfig& cfg) {
    std::vector<CertificateReport> out;
    const Rational x0(533'000);
    const Rational v0 = rat("15.96");
    const Interval Lx = log_enclosure(x0, precision, cfg);           // ln 533000
    const Interval Lxh = log_enclosure(266'500, precision, cfg);     // ln(x0/2)
    const Interval Lv = log_enclosure(v0, precision, cfg);           // ln 15.96

    {
        ReportBuilder b("tail.v-lower", "Section 6, v = ln r at r = 8,600,001");
        const TailParameters tp = tail_parameters(BigInt(8'600'001), precision, cfg);
        b.interval_greater("ln(8,600,001) > 15.96", tp.v, v0);
        b.note("ln is increasing, so v > 15.96 for every r >= 8,600,001");
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("tail.x-lower", "Section 6, x = 0.99 r / ln r at r = 8,600,001");
        const TailParameters tp = tail_parameters(BigInt(8'600'001), precision, cfg);
        b.interval_greater("0.99 * 8,600,001 / ln(8,600,001) > 533,000", tp.x, x0);
        b.interval_greater("r/ln r is increasing beyond r = 8,600,001: ln r > 1 there", tp.v, 1);
        b.exact_greater("consequently x/2 > 266,500 > 3275 (short-interval estimate applies)",
                        Rational(266'500), Rational(3275));
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("tail.logx-error", "Section 6, error term at x >= 533,000");
        b.interval_less("1/(2 ln^2 x) < 0.002876 at x = 533,000", half_inv_log_sq(Lx),
                        rat("0.002876"));
        b.interval_greater("monotonicity witness: ln x > 0, so the bound decreases in x", Lx, 0);
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("tail.logxhalf-error", "Section 6, error term at x/2 >= 266,500");
        b.interval_less("1/(2 ln^2(x/2)) < 0.00321 at x/2 = 266,500", half_inv_log_sq(Lxh),
                        rat("0.00321"));
        b.interval_greater("monotonicity witness: ln(x/2) > 0", Lxh, 0);
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("tail.theta-error-small", "Section 6, theta error at x >= 533,000");
        b.interval_less("1.2323 / ln x < 0.1 at x = 533,000", Interval::point(rat("1.2323")) / Lx,
                        rat("0.1"));
        b.interval_greater("monotonicity witness: ln x > 0", Lx, 0);
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("tail.M-factor-bound", "Section 6, log(8P) factor at x >= 533,000");
        const Interval ln8 = log_enclosure(8, precision, cfg);
        const Interval value = (half_inv_log_sq(Lx) + Rational(1)) *
                                   Interval::point(Rational(1) + Rational(1, 36260)) +
                               ln8 / x0;
        b.interval_less("(1 + 1/(2 ln^2 x))(1 + 1/36260) + ln(8)/x < 1.003 at x = 533,000", value,
                        rat("1.003"));
        b.interval_greater("monotonicity witness: ln x > 0 and ln 8 > 0, both addends decrease in x",
                           Lx, 0);
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("tail.eps-small", "Section 6, eps(y) < 0.001 once ln y > 18.9");
        b.exact_less("eps at ln y = 18.9 (exact rational)", eps_at_log(rat("18.9")), rat("0.001"));
        b.exact_greater("monotonicity witness: 18.9 > 0, eps decreases in ln y", rat("18.9"), 0);
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("tail.elementary-one", "Section 6, 0.44v - 2 ln v - 1.300 > 0 for v >= 15.96");
        const Interval value = Interval::point(rat("0.44") * v0) - Lv * Rational(2) - rat("1.300");
        b.interval_greater("value at v = 15.96 > 0.18", value, rat("0.18"));
        b.exact_less("derivative witness: 2/v < 0.44 at v = 15.96 (2/v decreases)",
                     Rational(2) / v0, rat("0.44"));
        b.exact_less("2/15.96 < 0.13", Rational(2) / v0, rat("0.13"));
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("tail.elementary-two", "Section 6, v/(0.99(v - 1.50)) > 1.010");
        b.exact_greater("value at v = 15.96", v0 / (rat("0.99") * (v0 - rat("1.50"))), rat("1.010"));
        b.exact_greater("limit witness: 1/0.99 = 100/99 > 1.010", Rational(100, 99), rat("1.010"));
        b.exact_greater("v/(v - 1.50) > 1 since v = 15.96 > 1.50", v0, rat("1.50"));
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("tail.s63-boundary", "Section 6.3, 0.2v - ln(1.2v) at v = 15.96");
        const Interval L12v = log_enclosure(rat("19.152"), precision, cfg);
        const Interval value = Interval::point(rat("0.2") * v0) - L12v;
        b.interval_greater("0.2v - ln(1.2v) > 0.23 at v = 15.96", value, rat("0.23"));
        b.exact_less("derivative witness: 1/v < 0.2 at v = 15.96 (1/v decreases)", Rational(1) / v0,
                     rat("0.2"));
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("tail.s64-boundary", "Section 6.4, -ln v + ln 0.99 + 1.266 at v = 15.96");
        const Interval L99 = log_enclosure(rat("0.99"), precision, cfg);
        const Interval value = -Lv + L99 + rat("1.266");
        b.interval_less("-ln v + ln 0.99 + 1.266 < -1.50 at v = 15.96", value, rat("-1.50"));
        b.interval_greater("monotonicity witness: ln v > 0, expression decreases in v", Lv, 0);
        out.push_back(b.finish());
    }
    return out;
}

CertificateReport verify_DM_identity(const Rational& precision, const LogConfig& cfg) {
    ReportBuilder b("tail.DM-identity", "Section 6.2, average-gap count");

    // D(M) - 4/M = 2((9 - 10L)M - (10L + 11)) / (5M(M-1)(M - L - 1.1)),
    // with L treated as a formal variable standing for ln 2.
    auto lhs = [](const Rational& M, const Rational& L) {
        return Rational(8) / (M - 1) - Rational(4) / (M - L - rat("1.1")) - Rational(4) / M;
    };
    auto rhs = [](const Rational& M, const Rational& L) {
        const Rational num = 2 * ((Rational(9) - 10 * L) * M - (10 * L + 11));
        const Rational den = 5 * M * (M - 1) * (M - L - rat("1.1"));
        return num / den;
    };
    const long Ms[] = {21, 25, 30, 40, 100};
    const Rational Ls[] = {Rational(7, 10), Rational(69, 100), Rational(7, 11)};
    bool all_equal = true;
    std::size_t samples = 0;
    for (long M : Ms)
        for (const Rational& L : Ls) {
            if (lhs(Rational(M), L) != rhs(Rational(M), L)) all_equal = false;
            ++samples;
        }
    b.fact("identity holds exactly at all grid samples", all_equal, std::to_string(samples),
           "15 required");
    b.note("cross-multiplied, both sides have total degree <= 4 in (M, L); a 5 x 3 grid is "
           "determining, so pointwise equality proves the identity");

    const Interval ln2 = log2_enclosure(precision, cfg);
    b.interval_greater("9 - 10 ln 2 > 2", Interval::point(Rational(9)) - ln2 * Rational(10), 2);
    b.interval_less("10 ln 2 + 11 < 18", ln2 * Rational(10) + Rational(11), 18);
    b.note("with those two bounds, (9 - 10 ln 2)M - (10 ln 2 + 11) > 2M - 18 for M > 0, and "
           "M(M-1)(M - ln 2 - 1.1) < M^3, so D(M) - 4/M > 2(2M - 18)/(5 M^3)");

    // 2(2M - 18)/(5 M^3) > 8/M^3 reduces to 4M - 36 > 20.
    b.exact_greater("downstream bound at M = 20: 4M - 36 > 20", Rational(4 * 20 - 36), 20);
    b.exact_greater("monotonicity witness: 4M - 36 increases in M", Rational(4), 0);

    // e^M / M^3 > 1 at M = 20 is equivalent to ln(8000) < 20.
    b.interval_less("e^M > M^3 at M = 20: ln(8000) < 20", log_enclosure(8000, precision, cfg), 20);
    b.exact_less("monotonicity witness: 3/M < 1 at M = 20, so M - 3 ln M increases", Rational(3, 20),
                 1);
    return b.finish();
}

CertificateReport verify_h_monotone(const Rational& precision, const LogConfig& cfg) {
    ReportBuilder b("tail.h-monotone", "Section 6.3, h(t) = 0.2t - ln t + 1 - (ln t - 2)/t");
    const Rational t0 = rat("15.96");
    const Interval L = log_enclosure(t0, precision, cfg);

    b.interval_greater("ln(15.96) > 2.770, so 3 - ln t <= 0.230 at t = 15.96", L, rat("2.770"));
    b.interval_less("ln(15.96) < 3, so the (ln t - 3)/t^2 term is negative there", L, 3);
    b.exact_greater("displayed chain: 0.2 - 1/15.96 - 0.230/15.96^2 > 0",
                    rat("0.2") - Rational(1) / t0 - rat("0.230") / (t0 * t0), 0);
    b.note("the chain bounds h'(t) = 0.2 - 1/t + (ln t - 3)/t^2 from below as displayed; the "
           "subtracted 0.230 dominates |ln t - 3| there, which the two enclosure checks witness");

    const Interval h = Interval::point(rat("0.2") * t0) - L + Rational(1) -
                       (L - Rational(2)) / t0;
    b.interval_greater("h(15.96) > 1.37", h, rat("1.37"));

    const Interval L12v = log_enclosure(rat("19.152"), precision, cfg);
    b.interval_less("consequence: ln(1.2v) < 0.2v at v = 15.96", L12v, rat("0.2") * t0);

    // the bound this feeds: p_{r-1} < 1.2 r ln r at r = 8,600,001
    {
        const Rational n(8'600'000);
        const Interval ln_n = log_enclosure(n, precision, cfg);
        const Interval lnln_n = loglog_enclosure(n, precision, cfg);
        const Interval bound = (ln_n + lnln_n - Rational(1) + (lnln_n - Rational(2)) / ln_n) * n;
        const Interval ln_r = log_enclosure(Rational(8'600'001), precision, cfg);
        const Rational rhs = rat("1.2") * Rational(8'600'001) * ln_r.lo();
        b.interval_less("spot check at r = 8,600,001: n-th prime bound at n = r - 1 "
                        "stays below 1.2 r ln r",
                        bound, rhs);
    }
    return b.finish();
}

namespace {

uint64_t mod_inverse(uint64_t a, uint64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a % p);
    while (new_r != 0) {
        const int64_t quot = r / new_r;
        const int64_t tmp_t = t - quot * new_t;
        t = new_t;
        new_t = tmp_t;
        const int64_t tmp_r = r - quot * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw Error("mod_inverse: not invertible");
    return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(p) : t);
}

uint64_t mod_u64(const BigInt& n, uint64_t p) {
    return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p));
}

bool probable_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

BigInt next_probable_prime_above(BigInt n) {
    ++n;
    if (n <= 2) return 2;
    if (n % 2 == 0) ++n;
    while (!probable_prime(n)) n += 2;
    return n;
}

BigInt prev_probable_prime_below(BigInt n) {
    --n;
    if (n < 2) throw DomainError("prev_probable_prime_below: none");
    if (n == 2) return 2;
    if (n % 2 == 0) --n;
    while (n > 2 && !probable_prime(n)) n -= 2;
    return n;
}

// Five-case witness for block offset m, per the residue construction.
uint64_t case_witness(uint64_t m, uint64_t q_minus, uint64_t q, const PrimeTable& table) {
    auto smallest_prime_factor = [&](uint64_t n) -> uint64_t {
        for (uint64_t p : table.primes()) {
            if (p * p > n) break;
            if (n % p == 0) return p;
        }
        return n;   // n itself prime (it is < q_minus here, hence in the table)
    };
    if (m <= q_minus - 2) return smallest_prime_factor(q_minus - m);
    if (m == q_minus - 1) return q_minus;
    if (m == q_minus) return 2;
    if (m == q_minus + 1) return q;
    return smallest_prime_factor(m - q_minus);
}

} // namespace

CrtBlock build_crt_block(uint64_t q, const PrimeTable& table, uint64_t q_cap) {
    if (q > q_cap)
        throw ResourceError("build_crt_block: q = " + std::to_string(q) + " beyond cap " +
                            std::to_string(q_cap));
    if (q > table.limit()) throw DomainError("build_crt_block: q beyond sieve limit");
    const auto iq = table.index_of(q);
    if (!iq) throw DomainError("build_crt_block: q must be prime");
    if (q < 13) throw DomainError("build_crt_block: need q >= 13 so the case analysis is nondegenerate");

    CrtBlock blk;
    blk.q = q;
    blk.q_minus = table.prime(*iq - 1);
    blk.P = primorial(table, q);
    blk.block_len = 2 * blk.q_minus - 1;

    for (std::size_t j = 1; j <= *iq; ++j) {
        const uint64_t p = table.prime(j);
        uint64_t a_p;
        if (p < blk.q_minus) a_p = blk.q_minus % p;
        else if (p == blk.q_minus) a_p = blk.q_minus - 1;
        else a_p = (blk.q_minus + 1) % q;
        blk.residues.emplace_back(p, a_p);
    }

    // incremental CRT for a == -a_p (mod p), normalized into [0, P)
    BigInt a = 0, modulus = 1;
    for (const auto& [p, a_p] : blk.residues) {
        const uint64_t target = (p - a_p % p) % p;
        const uint64_t current = mod_u64(a, p);
        const uint64_t diff = (target + p - current) % p;
        const uint64_t step = (diff * mod_inverse(mod_u64(modulus, p), p)) % p;
        a += modulus * step;
        modulus *= static_cast<unsigned long>(p);
    }
    if (modulus != blk.P) throw Error("build_crt_block: modulus mismatch");
    if (a < 0 || a >= blk.P) throw Error("build_crt_block: representative out of range");
    for (const auto& [p, a_p] : blk.residues)
        if ((mod_u64(a, p) + a_p) % p != 0) throw Error("build_crt_block: CRT solution check failed");
    blk.a = a;
    blk.block_start = a + 2 * blk.P + 1;

    blk.witnesses.reserve(blk.block_len);
    for (uint64_t m = 1; m <= blk.block_len; ++m) {
        const uint64_t w = case_witness(m, blk.q_minus, q, table);
        if (mod_u64(blk.a + 2 * blk.P + m, w) != 0)
            throw Error("build_crt_block: promised witness does not divide at m = " +
                        std::to_string(m));
        blk.witnesses.push_back(w);
    }
    return blk;
}

CertificateReport verify_crt_block(const CrtBlock& blk, const PrimeTable& table) {
    const std::string qs = std::to_string(blk.q);
    ReportBuilder b("crt.q" + qs + ".block", "Section 6.1, composite block at q = " + qs);

    const auto iq = table.index_of(blk.q);
    b.fact("q and q^- are consecutive primes",
           iq && *iq >= 2 && table.prime(*iq - 1) == blk.q_minus, std::to_string(blk.q_minus), qs);
    b.fact("P >= 2 q^- q", blk.P >= BigInt(2) * blk.q_minus * blk.q, "P (primorial of q)",
           std::to_string(2 * blk.q_minus * blk.q));

    // five-case classification: each offset lands in exactly one case, the
    // promised witness divides, and blind trial division agrees
    bool cases_ok = true, witness_ok = true, trial_ok = true;
    for (uint64_t m = 1; m <= blk.block_len; ++m) {
        const int in_case = (m <= blk.q_minus - 2 ? 1 : 0) + (m == blk.q_minus - 1 ? 1 : 0) +
                            (m == blk.q_minus ? 1 : 0) + (m == blk.q_minus + 1 ? 1 : 0) +
                            (m >= blk.q_minus + 2 ? 1 : 0);
        if (in_case != 1) cases_ok = false;

        const uint64_t w = blk.witnesses[m - 1];
        const BigInt element = blk.a + 2 * blk.P + m;
        if (w > blk.q || mod_u64(element, w) != 0 || element <= w) witness_ok = false;

        bool divisible = false;
        for (uint64_t p : table.primes()) {
            if (p > blk.q) break;
            if (mod_u64(element, p) == 0) {
                divisible = true;
                break;
            }
        }
        if (!divisible) trial_ok = false;
    }
    b.fact("every offset m in [1, 2q^- - 1] falls in exactly one residue case", cases_ok,
           std::to_string(blk.block_len) + " offsets", "-");
    b.fact("promised witness p <= q divides every block element (and element > p)", witness_ok,
           std::to_string(blk.block_len) + " witnesses", "-");
    b.fact("independent trial division by all primes <= q confirms compositeness", trial_ok,
           std::to_string(blk.block_len) + " elements", "-");

    const BigInt block_end = blk.block_start + (blk.block_len - 1);
    b.fact("block start > 2P", blk.block_start > 2 * blk.P, blk.block_start.get_str().size() < 40
               ? blk.block_start.get_str() : "(" + std::to_string(decimal_digits(blk.block_start)) + " digits)",
           "2P");
    b.fact("block end < 4P", block_end < 4 * blk.P,
           block_end.get_str().size() < 40 ? block_end.get_str()
                                           : "(" + std::to_string(decimal_digits(block_end)) + " digits)",
           "4P");

    // The compositeness certificates force the primes flanking the block to
    // differ by at least block_len + 1 = 2 q^-.
    b.fact("surrounding prime gap G_- >= 2 q^- = " + std::to_string(2 * blk.q_minus),
           cases_ok && witness_ok && trial_ok, "block of " + std::to_string(blk.block_len) +
               " certified composites", std::to_string(2 * blk.q_minus));

    const BigInt below = prev_probable_prime_below(blk.block_start);
    const BigInt above = next_probable_prime_above(block_end);
    const BigInt actual_gap = above - below;
    b.fact("located surrounding gap is >= 2 q^-", actual_gap >= BigInt(2 * blk.q_minus),
           actual_gap.get_str(), std::to_string(2 * blk.q_minus));
    b.note("flanking primes located by probable-prime search (exact below 2^64); the bound above "
           "rests only on the exact witness certificates");
    return b.finish();
}

std::optional<GapScan> scan_gap_region(const CrtBlock& blk, const PrimeTable& base,
                                       uint64_t scan_cap) {
    const BigInt hi_big = 8 * blk.P;
    if (!hi_big.fits_ulong_p() || hi_big.get_ui() > scan_cap) return std::nullopt;

    GapScan scan;
    scan.lo = 4 * blk.P;
    scan.hi = hi_big;
    const uint64_t lo = scan.lo.get_ui();
    const uint64_t hi = hi_big.get_ui();

    uint64_t prev = 0, min_gap = 0, count = 0, first = 0;
    scan_primes(lo + 1, hi, base, [&](uint64_t p) {
        if (count == 0) first = p;
        else {
            const uint64_t g = p - prev;
            if (min_gap == 0 || g < min_gap) min_gap = g;
        }
        prev = p;
        ++count;
    });
    scan.prime_count = count;
    scan.min_gap = min_gap;
    scan.first_prime = first;
    scan.last_prime = prev;
    return scan;
}

CertificateReport report_gap_scan(const CrtBlock& blk, const PrimeTable& base, uint64_t scan_cap) {
    const std::string qs = std::to_string(blk.q);
    ReportBuilder b("crt.q" + qs + ".scan", "Section 6.2, gap scan over (4P, 8P] at q = " + qs);
    const auto scan = scan_gap_region(blk, base, scan_cap);
    if (!scan) {
        b.note("gap scan skipped: 8P has " + std::to_string(decimal_digits(8 * blk.P)) +
               " digits and exceeds the scan cap " + std::to_string(scan_cap) +
               "; block and containment checks alone gate this q");
        return b.finish();
    }

    b.fact("scan found at least two primes in (4P, 8P]", scan->prime_count >= 2,
           std::to_string(scan->prime_count), ">= 2");
    // pigeonhole: min gap < 4P/(N-1) i.e. min_gap * (N-1) < 4P
    const BigInt lhs = BigInt(scan->min_gap) * (scan->prime_count - 1);
    b.fact("minimum gap G_+ = " + std::to_string(scan->min_gap) +
               " is below the mean: G_+ (N-1) < 4P with N = " + std::to_string(scan->prime_count),
           lhs < 4 * blk.P, lhs.get_str(), BigInt(4 * blk.P).get_str());
    b.fact("scanned pairs are consecutive primes (segmented scan is gap-free)",
           scan->first_prime > scan->lo && scan->last_prime <= scan->hi,
           scan->first_prime.get_str(), scan->last_prime.get_str());

    const BigInt below = prev_probable_prime_below(blk.block_start);
    const BigInt above = next_probable_prime_above(blk.block_start + (blk.block_len - 1));
    const BigInt g_minus = above - below;
    b.note("informational: G_+ = " + std::to_string(scan->min_gap) + " vs G_- = " +
           g_minus.get_str() + (BigInt(scan->min_gap) < g_minus
                                    ? " (later gap is smaller, as in the full argument)"
                                    : " (no contrast at this desk-scale q; not a gate)"));
    return b.finish();
}

CertificateReport two_primes_in_P_2P(const CrtBlock& blk, const PrimeTable& base,
                                     uint64_t scan_cap, const Rational& precision,
                                     const LogConfig& cfg) {
    const std::string qs = std::to_string(blk.q);
    ReportBuilder b("crt.q" + qs + ".bertrand", "Section 6.3, primes in (P, 2P] at q = " + qs);

    const BigInt two_p = 2 * blk.P;
    if (two_p.fits_ulong_p() && two_p.get_ui() <= scan_cap) {
        uint64_t count = 0;
        scan_primes(blk.P.get_ui() + 1, two_p.get_ui(), base, [&](uint64_t) { ++count; });
        b.fact("(P, 2P] contains at least two primes", count >= 2, std::to_string(count), ">= 2");
    } else {
        b.note("direct count skipped: 2P exceeds the scan cap; the displayed symbolic chain below "
               "carries the claim at tail scale");
    }

    // displayed chain at L = ln P = 20
    const Interval ln2 = log2_enclosure(precision, cfg);
    const Interval lhs = Rational(2) / (ln2 + Rational(19)) - Interval::point(Rational(10, 189));
    b.interval_greater("2/(L + ln 2 - 1) - 1/(L - 1.1) > 1/(2L) at L = 20", lhs, Rational(1, 40));
    b.interval_less("P/(2 ln P) > 2 at ln P = 20, as ln 80 < 20", log_enclosure(80, precision, cfg),
                    20);
    return b.finish();
}

std::string render_crt_block(const CrtBlock& blk) {
    std::ostringstream os;
    os << "composite block for q = " << blk.q << ", q^- = " << blk.q_minus << "\n";
    os << "P = " << blk.P.get_str() << "\n";
    os << "a = " << blk.a.get_str() << "  (a == -a_p mod p for all p <= q)\n";
    os << "block: a + 2P + m for m = 1 .. " << blk.block_len << "\n";
    os << "start = " << blk.block_start.get_str() << "\n";
    for (uint64_t m = 1; m <= blk.block_len; ++m) {
        os << "  m = " << m << ": witness " << blk.witnesses[m - 1] << " divides "
           << BigInt(blk.block_start + (m - 1)).get_str() << "\n";
    }
    return os.str();
}

} // namespace primecert

#include "primecert/certificates.hpp"

#include <array>

#include "primecert/densities.hpp"

namespace primecert {

namespace {

const char* kBLow = "0.261497212847642";
const char* kBHigh = "0.261497212847643";
const char* kCLow = "0.773156636699192";
const char* kCHigh = "0.773157136700943";

} // namespace

ConstantEnclosure axiom_B() {
    return {'B', Interval(Rational::parse(kBLow), Rational::parse(kBHigh)),
            "published interval, taken as an axiom input"};
}

ConstantEnclosure enclose_C(const PrimeTable& table, uint64_t n) {
    if (table.limit() < n) throw DomainError("enclose_C: sieve limit below tail cutoff");
    if (n < 2) throw DomainError("enclose_C: cutoff must be >= 2");
    const std::size_t count = table.pi(n);
    const Rational partial = exact_prime_sum(table, count, [](uint64_t p) {
        return std::pair<BigInt, BigInt>(1, BigInt(p) * BigInt(p - 1));
    });
    const Rational tail(BigInt(1), BigInt(n));
    return {'C', Interval(partial, partial + tail),
            "exact rational partial sum over p <= " + std::to_string(n) +
                " plus the telescoping tail bound 1/" + std::to_string(n)};
}

std::vector<CertificateReport> verify_constants(const PrimeTable& table) {
    std::vector<CertificateReport> out;
    {
        ReportBuilder b("constants.B.interval", "Certificate 4.2, Meissel-Mertens constant");
        const ConstantEnclosure B = axiom_B();
        b.fact("B enclosed in published interval (axiom input, not re-derived)", true,
               B.interval.str(), "-");
        b.note(B.method);
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("constants.C.enclosure", "Certificate 4.2, C = sum 1/(p(p-1))");
        const ConstantEnclosure C = enclose_C(table);
        b.exact_greater("partial sum > " + std::string(kCLow), C.interval.lo(),
                        Rational::parse(kCLow));
        b.exact_less("partial sum + 1/1999993 < " + std::string(kCHigh), C.interval.hi(),
                     Rational::parse(kCHigh));
        b.note(C.method);
        out.push_back(b.finish());
    }
    return out;
}

namespace {

struct Table1Row {
    unsigned r;
    uint64_t desc_a, desc_b, desc_g;
    const char* desc_lit;
    uint64_t asc_a, asc_b, asc_g;
    const char* asc_lit;
};

// The seventeen certified small-case rows.
constexpr std::array<Table1Row, 17> kTable1 = {{
    {3, 13, 17, 4, "3.506", 17, 19, 2, "3.048"},
    {4, 23, 29, 6, "4.759", 29, 31, 2, "4.371"},
    {5, 31, 37, 6, "6.748", 37, 41, 4, "6.263"},
    {6, 73, 79, 6, "6.437", 79, 83, 4, "6.282"},
    {7, 89, 97, 8, "8.085", 97, 101, 4, "7.911"},
    {8, 113, 127, 14, "9.303", 127, 131, 4, "9.145"},
    {9, 113, 127, 14, "11.677", 127, 131, 4, "11.452"},
    {10, 113, 127, 14, "14.414", 127, 131, 4, "14.101"},
    {11, 293, 307, 14, "12.085", 307, 311, 4, "12.011"},
    {12, 293, 307, 14, "14.050", 307, 311, 4, "13.959"},
    {13, 523, 541, 18, "13.651", 541, 547, 6, "13.607"},
    {14, 523, 541, 18, "15.415", 541, 547, 6, "15.364"},
    {15, 523, 541, 18, "17.279", 541, 547, 6, "17.218"},
    {16, 887, 907, 20, "16.752", 907, 911, 4, "16.721"},
    {17, 887, 907, 20, "18.438", 907, 911, 4, "18.402"},
    {18, 887, 907, 20, "20.191", 907, 911, 4, "20.151"},
    {19, 1129, 1151, 22, "20.742", 1151, 1153, 2, "20.711"},
}};

// R_r(a^-) for a prime a: the ratio over the weights of all primes below a.
Rational ratio_below(unsigned r, uint64_t a, const PrimeTable& table) {
    const std::size_t i = table.index_of(a).value();
    return ratio(r, i - 1, table);
}

void check_gap_fact(ReportBuilder& b, const PrimeTable& table, uint64_t a, uint64_t g) {
    const auto ia = table.index_of(a);
    const bool consecutive = ia && table.gap(*ia) == g;
    b.fact("gap " + std::to_string(a) + " -> " + std::to_string(a + g) + " is a prime gap of length " +
               std::to_string(g),
           consecutive, std::to_string(a), std::to_string(a + g));
}

} // namespace

std::vector<CertificateReport> verify_table1(const PrimeTable& table) {
    if (table.limit() < 1153) throw DomainError("verify_table1: sieve through 1153 required");
    std::vector<CertificateReport> out;

    for (const Table1Row& row : kTable1) {
        const std::string rs = std::to_string(row.r);
        const Rational desc_lit = Rational::parse(row.desc_lit);
        const Rational asc_lit = Rational::parse(row.asc_lit);
        {
            ReportBuilder b("table1.r" + rs + ".descent", "Table 1, r = " + rs);
            check_gap_fact(b, table, row.desc_a, row.desc_g);
            const Rational R = ratio_below(row.r, row.desc_a, table);
            b.exact_less("R_" + rs + "(" + std::to_string(row.desc_a) + "^-) < " + row.desc_lit, R,
                         desc_lit);
            b.exact_less(std::string(row.desc_lit) + " < g + 1 = " + std::to_string(row.desc_g + 1),
                         desc_lit, Rational(BigInt(row.desc_g + 1)));
            // independent two-sided bound on the same ratio
            const std::size_t i = table.index_of(row.desc_a).value() - 1;
            const RatioBounds bounds = ratio_bounds(row.r, i, table);
            b.fact("two-sided symmetric bound holds at i = " + std::to_string(i),
                   bounds.lower <= R && R <= bounds.upper,
                   decimal_string(bounds.lower, 12, Round::down),
                   decimal_string(bounds.upper, 12, Round::up));
            out.push_back(b.finish());
        }
        {
            ReportBuilder b("table1.r" + rs + ".ascent", "Table 1, r = " + rs);
            check_gap_fact(b, table, row.asc_a, row.asc_g);
            const Rational R = ratio_below(row.r, row.asc_a, table);
            b.exact_greater("R_" + rs + "(" + std::to_string(row.asc_a) + "^-) > " + row.asc_lit, R,
                            asc_lit);
            b.exact_greater(std::string(row.asc_lit) + " > g + 1 = " + std::to_string(row.asc_g + 1),
                            asc_lit, Rational(BigInt(row.asc_g + 1)));
            out.push_back(b.finish());
        }
        {
            ReportBuilder b("table1.r" + rs + ".order", "Table 1, r = " + rs);
            b.fact("descent gap ends no later than the ascent gap starts",
                   row.desc_b <= row.asc_a, std::to_string(row.desc_b), std::to_string(row.asc_a));
            out.push_back(b.finish());
        }
    }
    return out;
}

namespace {

struct RangeSpec {
    char label;
    unsigned r_min, r_max;
    uint64_t desc_a, desc_b;      // descent gap
    uint64_t asc_a, asc_b;        // later ascent gap
    const char* sum_strict_lit;   // lower bound on A(desc_a^-)
    const char* sum_full_lit;     // upper bound on A(desc_a)
    std::size_t w_index;          // W_{r_max - 1} cap index
    const char* w_lit;            // upper bound on W_{w_index}
    const char* desc_chain_lit;   // r_max/(strict - w) < this
    const char* asc_chain_lit;    // r_min/full > this
};

constexpr RangeSpec kRangeA = {'A', 20, 30, 15683, 15727, 15727, 15731,
                               "3.303755162423773", "3.303818929800384",
                               29, "2.612642166507777", "43.409", "6.053"};
constexpr RangeSpec kRangeB = {'B', 31, 47, 31397, 31469, 31469, 31477,
                               "3.372584257226677", "3.372616108417913",
                               46, "2.721441010945543", "72.181", "9.191"};

void verify_one_range(const RangeSpec& spec, const PrimeTable& table,
                      std::vector<CertificateReport>& out) {
    const std::string tag = std::string("ranges.") + spec.label;
    const std::string loc = std::string("Section 5.2, range ") + std::to_string(spec.r_min) +
                            " <= r <= " + std::to_string(spec.r_max);
    const Rational sum_strict = restricted_sum(table, spec.desc_a, /*strict=*/true);
    const Rational sum_full = restricted_sum(table, spec.desc_a, /*strict=*/false);
    const Rational w_cap = weight_prefix(table, spec.w_index);
    const Rational strict_lit = Rational::parse(spec.sum_strict_lit);
    const Rational full_lit = Rational::parse(spec.sum_full_lit);
    const Rational w_lit = Rational::parse(spec.w_lit);

    {
        ReportBuilder b(tag + ".sums", loc);
        b.exact_greater("A(" + std::to_string(spec.desc_a) + "^-) > " + spec.sum_strict_lit,
                        sum_strict, strict_lit);
        b.exact_less("A(" + std::to_string(spec.desc_a) + ") < " + spec.sum_full_lit, sum_full,
                     full_lit);
        b.exact_less("W_" + std::to_string(spec.w_index) + " < " + spec.w_lit, w_cap, w_lit);
        out.push_back(b.finish());
    }

    const uint64_t desc_g = spec.desc_b - spec.desc_a;
    const uint64_t asc_g = spec.asc_b - spec.asc_a;
    {
        ReportBuilder b(tag + ".descent", loc);
        check_gap_fact(b, table, spec.desc_a, desc_g);
        const Rational chain = Rational(static_cast<long>(spec.r_max)) / (strict_lit - w_lit);
        b.exact_less("displayed chain " + std::to_string(spec.r_max) + "/(" + spec.sum_strict_lit +
                         " - " + spec.w_lit + ") < " + spec.desc_chain_lit,
                     chain, Rational::parse(spec.desc_chain_lit));
        b.exact_less(std::string(spec.desc_chain_lit) + " < g + 1 = " + std::to_string(desc_g + 1),
                     Rational::parse(spec.desc_chain_lit), Rational(BigInt(desc_g + 1)));
        // every r in the range, by exact evaluation; the bound is monotone
        // increasing in r, which is also confirmed pointwise
        Rational prev;
        bool all_below = true, monotone = true;
        for (unsigned r = spec.r_min; r <= spec.r_max; ++r) {
            const Rational w_r1 = weight_prefix(table, r - 1);
            const Rational upper = Rational(static_cast<long>(r)) / (sum_strict - w_r1);
            if (upper >= Rational(BigInt(desc_g + 1))) all_below = false;
            if (r > spec.r_min && upper <= prev) monotone = false;
            prev = upper;
        }
        b.fact("exact upper bound r/(A - W_{r-1}) < g + 1 for every r in range", all_below,
               "max at r = " + std::to_string(spec.r_max) + ": " +
                   decimal_string(prev, 12, Round::up),
               std::to_string(desc_g + 1));
        b.fact("upper bound increases with r across the range", monotone, "-", "-");
        out.push_back(b.finish());
    }
    {
        ReportBuilder b(tag + ".ascent", loc);
        check_gap_fact(b, table, spec.asc_a, asc_g);
        const Rational chain = Rational(static_cast<long>(spec.r_min)) / full_lit;
        b.exact_greater("displayed chain " + std::to_string(spec.r_min) + "/" + spec.sum_full_lit +
                            " > " + spec.asc_chain_lit,
                        chain, Rational::parse(spec.asc_chain_lit));
        b.exact_greater(std::string(spec.asc_chain_lit) + " > g + 1 = " + std::to_string(asc_g + 1),
                        Rational::parse(spec.asc_chain_lit), Rational(BigInt(asc_g + 1)));
        Rational prev;
        bool all_above = true, monotone = true;
        for (unsigned r = spec.r_min; r <= spec.r_max; ++r) {
            const Rational lower = Rational(static_cast<long>(r)) / sum_full;
            if (lower <= Rational(BigInt(asc_g + 1))) all_above = false;
            if (r > spec.r_min && lower <= prev) monotone = false;
            prev = lower;
        }
        b.fact("exact lower bound r/A > g + 1 for every r in range", all_above,
               "min at r = " + std::to_string(spec.r_min), std::to_string(asc_g + 1));
        b.fact("lower bound increases with r across the range", monotone, "-", "-");
        out.push_back(b.finish());
    }
    {
        ReportBuilder b(tag + ".order", loc);
        b.fact("descent gap ends no later than the ascent gap starts", spec.desc_b <= spec.asc_a,
               std::to_string(spec.desc_b), std::to_string(spec.asc_a));
        out.push_back(b.finish());
    }
}

} // namespace

std::vector<CertificateReport> verify_ranges(const PrimeTable& table) {
    if (table.limit() < 31477) throw DomainError("verify_ranges: sieve through 31477 required");
    std::vector<CertificateReport> out;
    verify_one_range(kRangeA, table, out);
    verify_one_range(kRangeB, table, out);
    return out;
}

Interval nth_prime_upper_bound(uint64_t n, const Rational& precision, const LogConfig& cfg) {
    if (n <= 688383)
        throw DomainError("nth_prime_upper_bound: estimate licensed only for n > 688383");
    const Rational rn{BigInt(n)};
    const Interval ln = log_enclosure(rn, precision, cfg);
    const Interval lnln = loglog_enclosure(rn, precision, cfg);
    const Interval expr = ln + lnln - Rational(1) + (lnln - Rational(2)) / ln;
    return expr * rn;
}

RecordInput large_gap_record(const PrimeTable& table) {
    if (table.limit() < 43103) throw DomainError("large_gap_record: sieve through 43103 required");
    const BigInt p = primorial(table, 43103);
    if (p % 2310 != 0) throw Error("large_gap_record: 2310 does not divide 43103#");
    RecordInput rec;
    rec.name = "LARGE_GAP";
    rec.value = 587 * (p / 2310) - 455704;
    rec.gap = 1'113'106;
    rec.claimed_digits = 18662;
    return rec;
}

RecordInput twin_record() {
    BigInt base(504983334);
    BigInt b8192, b4096;
    mpz_pow_ui(b8192.get_mpz_t(), base.get_mpz_t(), 8192);
    mpz_pow_ui(b4096.get_mpz_t(), base.get_mpz_t(), 4096);
    RecordInput rec;
    rec.name = "TWIN";
    rec.value = b8192 - b4096 - 1;
    rec.gap = 2;
    rec.claimed_digits = 71298;
    return rec;
}

std::vector<CertificateReport> verify_records(const PrimeTable& table, const Rational& precision,
                                              const LogConfig& cfg) {
    std::vector<CertificateReport> out;
    const Rational B_lo = Rational::parse(kBLow), B_hi = Rational::parse(kBHigh);
    const Rational C_lo = Rational::parse(kCLow), C_hi = Rational::parse(kCHigh);

    const RecordInput sL = large_gap_record(table);
    const RecordInput sT = twin_record();

    // (a) exact digit counts
    {
        ReportBuilder b("records.sL.digits", "Certificate 4.3, large-gap endpoint");
        b.fact("s_L = 587 * 43103# / 2310 - 455704 has 18662 decimal digits",
               decimal_digits(sL.value) == 18662, std::to_string(decimal_digits(sL.value)),
               "18662");
        b.fact("s_L + g_L has 18662 decimal digits",
               decimal_digits(sL.value + sL.gap) == 18662,
               std::to_string(decimal_digits(sL.value + sL.gap)), "18662");
        b.note("primality of s_L and s_L + g_L is published record data, not re-proved here");
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("records.sT.digits", "Certificate 4.4, twin prime");
        b.fact("s_T = 504983334^8192 - 504983334^4096 - 1 has 71298 decimal digits",
               decimal_digits(sT.value) == 71298, std::to_string(decimal_digits(sT.value)),
               "71298");
        b.note("primality of s_T and s_T + 2 is published record data, not re-proved here");
        out.push_back(b.finish());
    }

    // (b) A(s_T) < 13.04331036 via the upper A bound at 10^71298,
    //     with eps taken at the smaller power 10^71297 by monotonicity
    {
        ReportBuilder b("records.sT.Abound", "Section 5.3, ascent side");
        b.fact("10^71297 <= s_T < 10^71298 (digit count)",
               pow10(71297) <= sT.value && sT.value < pow10(71298), "71298 digits", "-");
        const Interval ll = loglog_pow10(71298, precision, cfg);
        const Interval eps = epsilon_pow10(71297, precision, cfg);
        const Interval A_upper = ll + B_hi + eps + C_hi;
        b.interval_less("lnln(10^71298) + B + eps(10^71297) + C < 13.04331036", A_upper,
                        Rational::parse("13.04331036"));
        b.note("upper A bound requires y > 10372: holds, y = 10^71298");
        b.note("eps is decreasing, so eps(s_T) <= eps(10^71297)");
        out.push_back(b.finish());
    }
    // (c) ascent margin 40/13.04331036 > 3.066 > 3
    {
        ReportBuilder b("records.sT.ascent", "Section 5.3, ascent side");
        const Rational quotient = Rational(40) / Rational::parse("13.04331036");
        b.exact_greater("40 / 13.04331036 > 3.066", quotient, Rational::parse("3.066"));
        b.exact_greater("3.066 > g + 1 = 3", Rational::parse("3.066"), 3);
        out.push_back(b.finish());
    }
    // (d) n-th prime bounds
    {
        ReportBuilder b("records.nth.U", "Section 5.3, U at n = 8,599,999");
        const Interval U = nth_prime_upper_bound(8'599'999, precision, cfg);
        b.interval_less("U < 152,960,196", U, Rational(BigInt(152'960'196)));
        b.note("the n-th prime estimate is an axiom input evaluated rigorously, not re-proved");
        out.push_back(b.finish());
    }
    {
        ReportBuilder b("records.nth.p8600000", "Section 5.3, n = 8,600,000");
        const Interval U = nth_prime_upper_bound(8'600'000, precision, cfg);
        b.interval_less("p_{8,600,000} bound < 152,960,215", U, Rational(BigInt(152'960'215)));
        out.push_back(b.finish());
    }
    // (e) A(152,960,196) < 3.9713
    {
        ReportBuilder b("records.U.Abound", "Section 5.3, W_{r-1} cap");
        const Rational y(BigInt(152'960'196));
        const Interval A_upper =
            loglog_enclosure(y, precision, cfg) + B_hi + epsilon_enclosure(y, precision, cfg) + C_hi;
        b.interval_less("lnln(y) + B + eps(y) + C < 3.9713 at y = 152,960,196", A_upper,
                        Rational::parse("3.9713"));
        b.note("upper A bound requires y > 10372: holds");
        out.push_back(b.finish());
    }
    // (f) A(s_L^-) > 11.70287735 via the sharp lower bound at 10^18661
    {
        ReportBuilder b("records.sL.Alower", "Section 5.3, descent side");
        b.fact("s_L > 10^18661 (strict: s_L is odd, the power of ten is not)",
               sL.value > pow10(18661), "18662 digits", "-");
        const Interval ll = loglog_pow10(18661, precision, cfg);
        const Interval eps = epsilon_pow10(18661, precision, cfg);
        // 1/(10^18661 - 1) < 10^-100: subtract the short bound instead of
        // carrying an 18661-digit denominator through the report
        const Rational tail_bound(BigInt(1), pow10(100));
        const Interval A_lower = ll + B_lo - eps + C_lo - tail_bound;
        b.interval_greater("lnln(10^18661) + B_- - eps(10^18661) + C_- - 1/(10^18661 - 1) "
                           "> 11.70287735",
                           A_lower, Rational::parse("11.70287735"));
        b.note("1/(10^18661 - 1) replaced by the larger 10^-100 on the lower side");
        b.note("sharp lower bound requires y >= 1,999,993: holds, y = 10^18661");
        out.push_back(b.finish());
    }
    // (g) descent chain
    {
        ReportBuilder b("records.sL.descent", "Section 5.3, descent side");
        const Rational quotient =
            Rational(8'600'000) / (Rational::parse("11.70287735") - Rational::parse("3.9713"));
        b.exact_less("8,600,000 / (11.70287735 - 3.9713) < 1,112,322", quotient,
                     Rational(BigInt(1'112'322)));
        b.exact_less("1,112,322 < g_L + 1 = 1,113,107", Rational(BigInt(1'112'322)),
                     Rational(BigInt(1'113'107)));
        out.push_back(b.finish());
    }
    // (h) ordering
    {
        ReportBuilder b("records.order.digits", "Section 5.3, descent precedes ascent");
        b.fact("digits(s_T) > digits(s_L + g_L)",
               decimal_digits(sT.value) > decimal_digits(sL.value + sL.gap),
               std::to_string(decimal_digits(sT.value)),
               std::to_string(decimal_digits(sL.value + sL.gap)));
        out.push_back(b.finish());
    }
    return out;
}

} // namespace primecert

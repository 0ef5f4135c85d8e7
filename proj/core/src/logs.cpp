#include "primecert/logs.hpp"

namespace primecert {

namespace {

void require_positive_precision(const Rational& precision) {
    if (precision.sign() <= 0) throw DomainError("log: precision must be > 0");
}

Rational pow2_inv(unsigned j) {
    BigInt d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, j);
    return Rational(BigInt(1), d);
}

// 2*atanh(u) for y in [1/2, 2], u = (y-1)/(y+1), so |u| <= 1/3.
// Returns an enclosure of ln(y) of width <= precision.
Interval atanh_series(const Rational& y, const Rational& precision, const LogConfig& cfg) {
    const Rational u = (y - 1) / (y + 1);
    if (u.is_zero()) return Interval::point(0);

    const Rational u2 = u * u;
    const Rational one_minus_u2 = Rational(1) - u2;
    Rational sum = u;      // term n=0
    Rational upow = u;     // u^(2n+1)
    Rational tail;

    bool met = false;
    for (long n = 1; n <= cfg.series_cap; ++n) {
        // remainder after terms 0..n-1: |R| <= |u|^(2n+1)/((2n+1)(1-u^2))
        tail = 2 * (upow * u2).abs() / (Rational(2 * n + 1) * one_minus_u2);
        if (tail <= precision) {
            met = true;
            break;
        }
        upow *= u2;
        sum += upow / Rational(2 * n + 1);
    }
    if (!met)
        throw PrecisionError("log: series cap " + std::to_string(cfg.series_cap) +
                             " too small for requested precision");

    const Rational val = 2 * sum;
    // every remainder term carries the sign of u
    if (u.sign() > 0) return {val, val + tail};
    return {val - tail, val};
}

// x normalized to x_red * 2^e with x_red in [3/4, 3/2); e comes from bit
// lengths so huge arguments need no loop.
long reduce_pow2(const Rational& x, Rational& x_red) {
    const long bits_num = static_cast<long>(mpz_sizeinbase(x.numerator().get_mpz_t(), 2));
    const long bits_den = static_cast<long>(mpz_sizeinbase(x.denominator().get_mpz_t(), 2));
    long e = bits_num - bits_den;   // x / 2^e in (1/2, 2)

    mpq_class y;
    if (e >= 0) mpq_div_2exp(y.get_mpq_t(), x.raw().get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else mpq_mul_2exp(y.get_mpq_t(), x.raw().get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    x_red = Rational(BigInt(y.get_num()), BigInt(y.get_den()));

    if (x_red < Rational(3, 4)) {
        x_red *= 2;
        --e;
    }
    if (x_red >= Rational(3, 2)) {
        x_red /= 2;
        ++e;
    }
    return e;
}

} // namespace

Interval log2_enclosure(const Rational& precision, const LogConfig& cfg) {
    require_positive_precision(precision);
    return atanh_series(2, precision, cfg);
}

Interval log_enclosure(const Rational& x, const Rational& precision, const LogConfig& cfg) {
    if (x.sign() <= 0) throw DomainError("log: argument must be > 0");
    require_positive_precision(precision);
    if (x == Rational(1)) return Interval::point(0);

    Rational x_red;
    const long e = reduce_pow2(x, x_red);
    if (e == 0) return atanh_series(x_red, precision, cfg);

    const Rational half = precision / 2;
    const long ae = e < 0 ? -e : e;
    const Interval ln2 = atanh_series(2, half / Rational(ae), cfg);
    const Interval scaled = e > 0 ? ln2 * Rational(e) : -(ln2 * Rational(ae));
    if (x_red == Rational(1)) return scaled;
    return atanh_series(x_red, half, cfg) + scaled;
}

Interval log10_enclosure(const Rational& precision, const LogConfig& cfg) {
    return log_enclosure(10, precision, cfg);
}

Interval log_pow10(unsigned long d, const Rational& precision, const LogConfig& cfg) {
    require_positive_precision(precision);
    if (d == 0) return Interval::point(0);
    const Interval ln10 = log10_enclosure(precision / Rational(static_cast<long>(d)), cfg);
    return ln10 * Rational(static_cast<long>(d));
}

namespace {

// The composed enclosures are evaluated along the canonical width chain
// 2^-3, 2^-4, ... and intersected.  Each chain step is a deterministic
// function of the argument alone, so a tighter precision evaluates a
// superset of steps and the intersection can only shrink; that makes the
// monotone-refinement contract structural rather than incidental.
constexpr unsigned kChainStart = 3;
constexpr unsigned kCertifyProbeLimit = 200;

unsigned chain_end(const Rational& precision) {
    unsigned j = kChainStart;
    Rational w = pow2_inv(j);
    while (w > precision) {
        ++j;
        w /= 2;
        if (j > 100000) throw PrecisionError("log: precision request out of range");
    }
    return j;
}

// One chain step of ln(ln(.)): inner enclosure at 2^-(j+2), outer endpoint
// logs at 2^-(j+2); total width < 2^-j provided inner.lo > 1.
template <typename InnerFn>
Interval loglog_step(InnerFn&& inner, unsigned j, const LogConfig& cfg) {
    const Rational w = pow2_inv(j + 2);
    const Interval in = inner(w);
    const Interval lo = log_enclosure(in.lo(), w, cfg);
    const Interval hi = log_enclosure(in.hi(), w, cfg);
    return {lo.lo(), hi.hi()};
}

template <typename InnerFn>
Interval loglog_from(InnerFn&& inner, const Rational& precision, const LogConfig& cfg) {
    // domain: first chain step whose inner enclosure sits strictly above 1
    unsigned j_cert = kChainStart;
    for (;; ++j_cert) {
        if (inner(pow2_inv(j_cert + 2)).lo() > Rational(1)) break;
        if (j_cert >= kChainStart + kCertifyProbeLimit)
            throw DomainError("loglog: cannot certify ln(x) > 1");
    }

    const unsigned j_end = std::max(chain_end(precision), j_cert);
    Interval acc = loglog_step(inner, j_cert, cfg);
    for (unsigned j = j_cert + 1; j <= j_end; ++j) {
        const Interval step = loglog_step(inner, j, cfg);
        acc = {std::max(acc.lo(), step.lo()), std::min(acc.hi(), step.hi())};
    }
    return acc;
}

} // namespace

Interval loglog_enclosure(const Rational& x, const Rational& precision, const LogConfig& cfg) {
    if (x <= Rational(1)) throw DomainError("loglog: argument must be > 1");
    require_positive_precision(precision);
    return loglog_from([&](const Rational& w) { return log_enclosure(x, w, cfg); },
                       precision, cfg);
}

Interval loglog_pow10(unsigned long d, const Rational& precision, const LogConfig& cfg) {
    if (d == 0) throw DomainError("loglog: 10^0 is not > 1");
    require_positive_precision(precision);
    return loglog_from([&](const Rational& w) { return log_pow10(d, w, cfg); },
                       precision, cfg);
}

Interval epsilon_from_log(const Interval& log_y) {
    if (log_y.lo().sign() <= 0) throw DomainError("epsilon: needs ln(y) > 0");
    auto eps_at = [](const Rational& l) {
        const Rational l2 = l * l;
        return Rational(1) / (10 * l2) + Rational(4) / (15 * l2 * l);
    };
    return {eps_at(log_y.hi()), eps_at(log_y.lo())};    // decreasing in ln y
}

namespace {

// eps over the same canonical chain; the endpoint map is exact, so nesting
// of the inner log enclosures is inherited directly.
template <typename InnerFn>
Interval epsilon_from(InnerFn&& inner, const Rational& precision) {
    for (unsigned j = kChainStart; j <= kChainStart + kCertifyProbeLimit; ++j) {
        const Interval logy = inner(pow2_inv(j + 2));
        if (logy.lo().sign() <= 0) continue;
        const Interval eps = epsilon_from_log(logy);
        if (eps.width() <= precision) return eps;
    }
    throw PrecisionError("epsilon: could not meet requested width");
}

} // namespace

Interval epsilon_enclosure(const Rational& y, const Rational& precision, const LogConfig& cfg) {
    if (y <= Rational(1)) throw DomainError("epsilon: argument must be > 1");
    require_positive_precision(precision);
    return epsilon_from([&](const Rational& w) { return log_enclosure(y, w, cfg); }, precision);
}

Interval epsilon_pow10(unsigned long d, const Rational& precision, const LogConfig& cfg) {
    if (d == 0) throw DomainError("epsilon: 10^0 is not > 1");
    require_positive_precision(precision);
    return epsilon_from([&](const Rational& w) { return log_pow10(d, w, cfg); }, precision);
}

} // namespace primecert

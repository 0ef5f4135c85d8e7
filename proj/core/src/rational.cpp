#include "primecert/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace primecert {

BigInt pow10(unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, exp);
    return r;
}

unsigned long decimal_digits(const BigInt& n) {
    if (n < 1) throw DomainError("decimal_digits: argument must be >= 1");
    // sizeinbase is exact or one too big; settle with one exact comparison.
    unsigned long d = mpz_sizeinbase(n.get_mpz_t(), 10);
    if (d > 1 && n < pow10(d - 1)) --d;
    return d;
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("Rational: reciprocal of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

std::string Rational::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw UsageError("Rational::parse: bad literal '" + std::string(text) + "'"); };
    if (text.empty()) fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string n(text.substr(0, slash)), d(text.substr(slash + 1));
        if (n.empty() || d.empty()) fail();
        try {
            return Rational(BigInt(n, 10), BigInt(d, 10));
        } catch (const std::invalid_argument&) {
            fail();
        }
    }

    size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') neg = text[pos++] == '-';

    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!seen_digit) fail();

    long exp10 = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool eneg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) eneg = text[pos++] == '-';
        if (pos == text.size()) fail();
        for (; pos < text.size(); ++pos) {
            if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
            exp10 = exp10 * 10 + (text[pos] - '0');
            if (exp10 > 1000000) throw UsageError("Rational::parse: exponent out of range");
        }
        if (eneg) exp10 = -exp10;
    }
    if (pos != text.size()) fail();

    BigInt mantissa(digits, 10);
    if (neg) mantissa = -mantissa;
    long net = exp10 - frac_digits;
    if (net >= 0) return Rational(mantissa * pow10(static_cast<unsigned long>(net)), BigInt(1));
    return Rational(mantissa, pow10(static_cast<unsigned long>(-net)));
}

std::string decimal_string(const Rational& x, int significant, Round mode) {
    if (significant < 1) throw UsageError("decimal_string: need at least one digit");
    if (x.is_zero()) return "0";

    const bool neg = x.sign() < 0;
    BigInt a = x.numerator();
    if (neg) a = -a;
    const BigInt b = x.denominator();

    // e with 10^e <= a/b < 10^(e+1)
    long e = static_cast<long>(decimal_digits(a)) - static_cast<long>(decimal_digits(b));
    auto cmp_pow = [&](long k) {
        // sign of a/b - 10^k
        if (k >= 0) return cmp(a, b * pow10(static_cast<unsigned long>(k)));
        return cmp(a * pow10(static_cast<unsigned long>(-k)), b);
    };
    if (cmp_pow(e) < 0) --e;
    if (cmp_pow(e + 1) >= 0) ++e;

    // mantissa = floor(a/b * 10^(significant-1-e)), exactly `significant` digits
    const long shift = significant - 1 - e;
    BigInt num = a, den = b;
    if (shift >= 0) num *= pow10(static_cast<unsigned long>(shift));
    else den *= pow10(static_cast<unsigned long>(-shift));
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const bool inexact = r != 0;

    // directed rounding on the signed value
    const bool bump = inexact && ((mode == Round::up && !neg) || (mode == Round::down && neg));
    if (bump) {
        ++q;
        if (q == pow10(static_cast<unsigned long>(significant))) {
            q = pow10(static_cast<unsigned long>(significant - 1));
            ++e;
        }
    }

    std::string m = q.get_str();
    if (!inexact) {
        while (m.size() > 1 && m.back() == '0') m.pop_back();
    }

    std::string out;
    if (e >= -4 && e <= 20) {
        if (e >= 0) {
            if (static_cast<size_t>(e + 1) >= m.size()) {
                out = m + std::string(static_cast<size_t>(e + 1) - m.size(), '0');
            } else {
                out = m.substr(0, static_cast<size_t>(e + 1)) + "." + m.substr(static_cast<size_t>(e + 1));
            }
        } else {
            out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + m;
        }
    } else {
        out = m.substr(0, 1);
        if (m.size() > 1) out += "." + m.substr(1);
        out += "e" + std::to_string(e);
    }
    return neg ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.raw();
}

} // namespace primecert

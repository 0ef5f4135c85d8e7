#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "primecert/errors.hpp"

namespace primecert {

using BigInt = mpz_class;

/// 10^exp as an exact integer.
BigInt pow10(unsigned long exp);

/// Exact number of base-10 digits of n (n >= 1).  Computed by integer
/// comparison against powers of ten, never through logarithms.
unsigned long decimal_digits(const BigInt& n);

/// Exact arbitrary-precision fraction.  Always stored in lowest terms with a
/// positive denominator; arithmetic never rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
    Rational(long n) : v_(n) {}                // NOLINT
    Rational(unsigned long n) : v_(n) {}       // NOLINT
    explicit Rational(const BigInt& n) : v_(n) {}

    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "45", "-3.506", "1e-9", "2.5e3", or "23/12" into an exact value.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const;
    Rational reciprocal() const;

    /// "num/den", or just "num" for integers.
    std::string str() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;   // canonical: den > 0, gcd(num, den) = 1
};

/// Directed rounding for decimal rendering.
enum class Round { down, up };

/// Renders x with `significant` digits, rounded toward -inf (down) or +inf
/// (up).  Exact short decimals render without padding.  Deterministic.
std::string decimal_string(const Rational& x, int significant, Round mode);

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace primecert

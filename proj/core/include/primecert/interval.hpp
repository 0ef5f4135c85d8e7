#pragma once

#include <string>

#include "primecert/rational.hpp"

namespace primecert {

/// Closed interval [lo, hi] of exact rationals.  Every operation returns an
/// interval containing the true real result; with rational endpoints the
/// arithmetic operations are themselves exact, so widening only enters
/// through series truncation in the logarithm routines.
class Interval {
public:
    Interval() = default;
    Interval(Rational lo, Rational hi);
    static Interval point(const Rational& x) { return {x, x}; }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool is_positive() const { return lo_.sign() > 0; }
    bool is_negative() const { return hi_.sign() < 0; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    Interval operator-() const { return {-hi_, -lo_}; }

    friend Interval operator+(const Interval& a, const Rational& b) { return {a.lo_ + b, a.hi_ + b}; }
    friend Interval operator-(const Interval& a, const Rational& b) { return {a.lo_ - b, a.hi_ - b}; }
    friend Interval operator*(const Interval& a, const Rational& b);
    friend Interval operator/(const Interval& a, const Rational& b);
    friend Interval operator-(const Rational& a, const Interval& b) { return {a - b.hi_, a - b.lo_}; }
    friend Interval operator/(const Rational& a, const Interval& b);

    /// [lo^2, hi^2] for positive intervals (the only power we need).
    Interval square_positive() const;

    /// Endpoints pushed outward to the enclosing multiples of `grid`.
    Interval outward(const Rational& grid) const;

    std::string str(int significant = 18) const;

private:
    Rational lo_, hi_;
};

enum class IntervalOrder { less, greater, overlap };

/// LESS iff a.hi < b.lo, GREATER iff a.lo > b.hi, OVERLAP otherwise.
/// OVERLAP is never treated as a verified inequality by any caller.
IntervalOrder compare(const Interval& a, const Interval& b);

} // namespace primecert

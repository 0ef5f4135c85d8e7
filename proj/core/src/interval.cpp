#include "primecert/interval.hpp"

#include <algorithm>

namespace primecert {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw DomainError("Interval: lo > hi");
}

Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

Interval operator-(const Interval& a, const Interval& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

Interval operator*(const Interval& a, const Interval& b) {
    const Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
    const Rational p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0)
        throw DomainError("Interval: division by interval containing zero");
    return a * Interval(b.hi_.reciprocal(), b.lo_.reciprocal());
}

Interval operator*(const Interval& a, const Rational& b) {
    if (b.sign() >= 0) return {a.lo_ * b, a.hi_ * b};
    return {a.hi_ * b, a.lo_ * b};
}

Interval operator/(const Interval& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("Interval: division by zero");
    return a * b.reciprocal();
}

Interval operator/(const Rational& a, const Interval& b) {
    return Interval::point(a) / b;
}

Interval Interval::square_positive() const {
    if (lo_.sign() <= 0) throw DomainError("Interval: square_positive needs lo > 0");
    return {lo_ * lo_, hi_ * hi_};
}

Interval Interval::outward(const Rational& grid) const {
    if (grid.sign() <= 0) throw DomainError("Interval: outward grid must be positive");
    auto snap = [&](const Rational& x, bool down) {
        const Rational q = x / grid;
        BigInt k;
        if (down) mpz_fdiv_q(k.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
        else mpz_cdiv_q(k.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
        return Rational(k) * grid;
    };
    return {snap(lo_, true), snap(hi_, false)};
}

std::string Interval::str(int significant) const {
    return "[" + decimal_string(lo_, significant, Round::down) + ", " +
           decimal_string(hi_, significant, Round::up) + "]";
}

IntervalOrder compare(const Interval& a, const Interval& b) {
    if (a.hi() < b.lo()) return IntervalOrder::less;
    if (a.lo() > b.hi()) return IntervalOrder::greater;
    return IntervalOrder::overlap;
}

} // namespace primecert

#include "primecert/densities.hpp"

namespace primecert {

SymmetricRow::SymmetricRow(unsigned r_cap) : scaled_(r_cap + 1, BigInt(0)) {
    scaled_[0] = 1;   // E_0 = 1
}

void SymmetricRow::advance(const Rational& w) {
    if (w.sign() <= 0) throw DomainError("SymmetricRow: weight must be positive");
    const BigInt a = w.numerator();
    const BigInt b = w.denominator();
    // E_m' * denom * b = (E_m * denom) * b + a * (E_{m-1} * denom)
    for (unsigned m = r_cap(); m >= 1; --m) {
        scaled_[m] = scaled_[m] * b + a * scaled_[m - 1];
    }
    scaled_[0] *= b;
    denom_ *= b;
    ++count_;
}

void SymmetricRow::advance_prime(uint64_t p) {
    if (p < 2) throw DomainError("SymmetricRow: not a prime weight");
    advance(Rational(BigInt(1), BigInt(p - 1)));
}

Rational SymmetricRow::value(unsigned m) const {
    if (m >= scaled_.size()) throw DomainError("SymmetricRow: m beyond r_cap");
    return Rational(scaled_[m], denom_);
}

Rational SymmetricRow::ratio(unsigned r) const {
    if (r == 0 || r >= scaled_.size()) throw DomainError("SymmetricRow: ratio index");
    if (scaled_[r] == 0)
        throw UndefinedRatioError("R_" + std::to_string(r) + " undefined: E_r = 0 (i < r)");
    return Rational(scaled_[r - 1], scaled_[r]);
}

int SymmetricRow::compare_ratio(unsigned r, uint64_t t) const {
    if (r == 0 || r >= scaled_.size()) throw DomainError("SymmetricRow: ratio index");
    if (scaled_[r] == 0)
        throw UndefinedRatioError("R_" + std::to_string(r) + " undefined: E_r = 0 (i < r)");
    const BigInt rhs = scaled_[r] * t;
    return cmp(scaled_[r - 1], rhs);
}

DensityRow::DensityRow(unsigned m_cap) : deltas_(m_cap + 1, Rational(0)) {
    deltas_[0] = 1;   // delta_0(0) = 1
}

void DensityRow::advance_prime(uint64_t p) {
    if (p < 2) throw DomainError("DensityRow: not a prime");
    const Rational inv_p(BigInt(1), BigInt(p));
    const Rational keep = Rational(1) - inv_p;
    for (unsigned m = m_cap(); m >= 1; --m)
        deltas_[m] = keep * deltas_[m] + inv_p * deltas_[m - 1];
    deltas_[0] *= keep;
    squarefree_ *= keep;
    ++count_;
}

const Rational& DensityRow::value(unsigned m) const {
    if (m >= deltas_.size()) throw DomainError("DensityRow: m beyond cap");
    return deltas_[m];
}

Rational delta(unsigned m, std::size_t i, const PrimeTable& table) {
    if (i > table.size()) throw DomainError("delta: index beyond table");
    if (m > i) return 0;

    DensityRow rec(m);
    SymmetricRow sym(m);
    for (std::size_t j = 1; j <= i; ++j) {
        rec.advance_prime(table.prime(j));
        sym.advance_prime(table.prime(j));
    }
    const Rational by_recurrence = rec.value(m);
    const Rational by_symmetric = rec.squarefree_factor() * sym.value(m);
    if (by_recurrence != by_symmetric)
        throw Error("delta: recurrence and symmetric routes disagree");
    return by_recurrence;
}

Rational density_dk(unsigned k, std::size_t i, const PrimeTable& table) {
    if (k < 1) throw DomainError("density_dk: k must be >= 1");
    if (i < 1) throw DomainError("density_dk: i must be >= 1");
    return delta(k - 1, i - 1, table) / Rational(BigInt(table.prime(i)));
}

Rational ratio(unsigned r, std::size_t i, const PrimeTable& table) {
    if (r < 1) throw DomainError("ratio: r must be >= 1");
    if (i < r)
        throw UndefinedRatioError("ratio: R_r(i) undefined for i < r");
    SymmetricRow row(r);
    for (std::size_t j = 1; j <= i; ++j) row.advance_prime(table.prime(j));
    return row.ratio(r);
}

ThresholdVerdict threshold_check(unsigned r, std::size_t i, const PrimeTable& table) {
    if (r < 1 || i < 1) throw DomainError("threshold_check: need r >= 1, i >= 1");
    if (i - 1 < r)
        throw UndefinedRatioError("threshold_check: delta_r(i-1) = 0, criterion not applicable");

    ThresholdVerdict v;
    v.r = r;
    v.i = i;
    v.gap_plus_one = table.gap(i) + 1;
    v.ratio = ratio(r, i - 1, table);
    const Rational threshold(BigInt(v.gap_plus_one));
    if (v.ratio < threshold) v.verdict = Direction::descent;
    else if (v.ratio > threshold) v.verdict = Direction::ascent;
    else v.verdict = Direction::equal;
    return v;
}

RatioBounds ratio_bounds(unsigned r, std::size_t i, const PrimeTable& table) {
    if (r < 1) throw DomainError("ratio_bounds: r must be >= 1");
    if (i < r) throw UndefinedRatioError("ratio_bounds: need i >= r");

    const Rational A = weight_prefix(table, i);           // A(p_i) = W_i
    const Rational W_r1 = weight_prefix(table, r - 1);
    RatioBounds b;
    b.lower = Rational(static_cast<long>(r)) / A;
    b.upper = Rational(static_cast<long>(r)) / (A - W_r1);

    const Rational exact = ratio(r, i, table);
    if (exact < b.lower || exact > b.upper)
        throw Error("ratio_bounds: sandwich violated");
    return b;
}

SweepResult threshold_consistency_sweep(unsigned r_max, uint64_t p_max, const PrimeTable& table) {
    if (p_max > table.limit()) throw DomainError("sweep: p_max beyond table");
    const std::size_t i_max = table.pi(p_max);
    if (i_max + 1 > table.size())
        throw DomainError("sweep: need one prime beyond p_max for the last gap");

    SweepResult result;
    // delta rows scaled by prod p_j: integer DP, with the previous row kept
    // for the exact first difference.
    std::vector<BigInt> cur(r_max + 1, BigInt(0)), prev;
    cur[0] = 1;
    for (std::size_t i = 1; i <= i_max; ++i) {
        const uint64_t p = table.prime(i);
        prev = cur;
        for (unsigned m = r_max; m >= 1; --m)
            cur[m] = cur[m] * (p - 1) + cur[m - 1];
        cur[0] *= (p - 1);

        // gap p_i -> p_{i+1}; verdict needs delta_r(i-1) > 0, i.e. i-1 >= r
        const uint64_t p_next = table.prime(i + 1);
        for (unsigned r = 1; r <= r_max; ++r) {
            if (i - 1 < r) continue;
            // sign of d_{r+1}(p_{i+1}) - d_{r+1}(p_i): scaled difference
            // delta_r(i)*N_i^-1/p_{i+1} - delta_r(i-1)*N_{i-1}^-1/p_i
            // reduces to sign(cur[r] - p_{i+1} * prev[r]).
            const int diff_sign = cmp(cur[r], prev[r] * p_next);
            // threshold: R_r(i-1) vs g_i + 1, i.e. prev[r-1] vs (g+1) prev[r]
            const int verdict_sign = cmp(prev[r - 1], prev[r] * (p_next - p + 1));
            ++result.checked;
            if (diff_sign != verdict_sign) result.mismatches.emplace_back(r, i);
        }
    }
    return result;
}

} // namespace primecert

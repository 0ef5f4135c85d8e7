#include "primecert/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "primecert/logs.hpp"

namespace primecert {

namespace {

constexpr uint64_t kSegmentSpan = 1u << 21;   // odd numbers per segment

std::vector<uint64_t> small_sieve(uint64_t limit) {
    std::vector<uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

uint64_t isqrt_u64(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Marks odd composites in [lo, lo + 2*count) (odd lo) and reports primes.
void sieve_segment(uint64_t lo, std::size_t count, const std::vector<uint64_t>& base,
                   std::vector<uint8_t>& mark, const std::function<void(uint64_t)>& emit) {
    mark.assign(count, 0);
    const uint64_t hi = lo + 2 * (count - 1);
    for (uint64_t p : base) {
        if (p == 2) continue;
        if (p * p > hi) break;
        uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
        if (start % 2 == 0) start += p;
        for (uint64_t m = start; m <= hi; m += 2 * p) mark[(m - lo) / 2] = 1;
    }
    for (std::size_t k = 0; k < count; ++k)
        if (!mark[k]) emit(lo + 2 * k);
}

} // namespace

PrimeTable PrimeTable::sieve(uint64_t limit, uint64_t limit_cap) {
    if (limit < 2) throw DomainError("sieve: limit must be >= 2");
    if (limit > limit_cap)
        throw ResourceError("sieve: limit " + std::to_string(limit) + " exceeds cap " +
                            std::to_string(limit_cap));

    const uint64_t root = isqrt_u64(limit);
    const std::vector<uint64_t> base = small_sieve(std::max<uint64_t>(root, 3));

    std::vector<uint64_t> primes;
    primes.reserve(static_cast<std::size_t>(limit > 100 ? 1.2 * limit / std::log(double(limit)) : 32));
    primes.push_back(2);
    std::vector<uint8_t> mark;
    for (uint64_t lo = 3; lo <= limit; lo += 2 * kSegmentSpan) {
        const uint64_t span = std::min<uint64_t>(kSegmentSpan, (limit - lo) / 2 + 1);
        sieve_segment(lo, static_cast<std::size_t>(span), base, mark,
                      [&](uint64_t p) { primes.push_back(p); });
    }
    return PrimeTable(std::move(primes), limit);
}

uint64_t PrimeTable::prime(std::size_t i) const {
    if (i == 0 || i > primes_.size()) throw DomainError("PrimeTable: index out of range");
    return primes_[i - 1];
}

uint64_t PrimeTable::gap(std::size_t i) const {
    if (i == 0 || i + 1 > primes_.size()) throw DomainError("PrimeTable: gap index out of range");
    return primes_[i] - primes_[i - 1];
}

std::size_t PrimeTable::pi(uint64_t y) const {
    if (y > limit_) throw DomainError("PrimeTable: pi argument beyond sieve limit");
    return static_cast<std::size_t>(
        std::upper_bound(primes_.begin(), primes_.end(), y) - primes_.begin());
}

std::optional<std::size_t> PrimeTable::index_of(uint64_t p) const {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - primes_.begin()) + 1;
}

WeightVector::WeightVector(const PrimeTable& table, std::size_t count) {
    if (count > table.size()) throw DomainError("WeightVector: count beyond table");
    weights_.reserve(count);
    prefix_.reserve(count + 1);
    prefix_.push_back(0);
    for (std::size_t j = 1; j <= count; ++j) {
        weights_.emplace_back(BigInt(1), BigInt(table.prime(j) - 1));
        prefix_.push_back(prefix_.back() + weights_.back());
    }
}

const Rational& WeightVector::weight(std::size_t j) const {
    if (j == 0 || j > weights_.size()) throw DomainError("WeightVector: weight index");
    return weights_[j - 1];
}

const Rational& WeightVector::prefix(std::size_t n) const {
    if (n >= prefix_.size()) throw DomainError("WeightVector: prefix index");
    return prefix_[n];
}

namespace {

std::pair<BigInt, BigInt> balanced_sum(const PrimeTable& table, std::size_t lo, std::size_t hi,
                                       const std::function<std::pair<BigInt, BigInt>(uint64_t)>& term) {
    if (hi - lo == 1) return term(table.prime(lo));
    const std::size_t mid = lo + (hi - lo) / 2;
    auto [n1, d1] = balanced_sum(table, lo, mid, term);
    auto [n2, d2] = balanced_sum(table, mid, hi, term);
    return {n1 * d2 + n2 * d1, d1 * d2};
}

} // namespace

Rational exact_prime_sum(const PrimeTable& table, std::size_t count,
                         const std::function<std::pair<BigInt, BigInt>(uint64_t)>& term) {
    if (count == 0) return 0;
    if (count > table.size()) throw DomainError("exact_prime_sum: count beyond table");
    auto [num, den] = balanced_sum(table, 1, count + 1, term);
    return Rational(num, den);
}

Rational weight_prefix(const PrimeTable& table, std::size_t n) {
    return exact_prime_sum(table, n, [](uint64_t p) {
        return std::pair<BigInt, BigInt>(1, BigInt(p - 1));
    });
}

Rational restricted_sum(const PrimeTable& table, uint64_t y, bool strict) {
    if (y > table.limit()) throw DomainError("restricted_sum: bound beyond sieve limit");
    std::size_t n = table.pi(y);
    if (strict && n > 0 && table.prime(n) == y) --n;
    return weight_prefix(table, n);
}

BigInt primorial(const PrimeTable& table, uint64_t q) {
    if (q > table.limit()) throw DomainError("primorial: argument beyond sieve limit");
    if (!table.index_of(q)) throw DomainError("primorial: argument must be prime");
    BigInt result = 1;
    for (uint64_t p : table.primes()) {
        if (p > q) break;
        mpz_mul_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(p));
    }
    return result;
}

Interval theta_enclosure(const PrimeTable& table, uint64_t x, const Rational& precision) {
    const std::size_t n = table.pi(x);
    if (n == 0) return Interval::point(0);
    return log_enclosure(Rational(primorial(table, table.prime(n))), precision);
}

void scan_primes(uint64_t lo, uint64_t hi, const PrimeTable& base,
                 const std::function<void(uint64_t)>& fn) {
    if (lo > hi) return;
    const uint64_t root = isqrt_u64(hi);
    if (base.limit() < root)
        throw ResourceError("scan_primes: base table too small for range");

    if (lo <= 2 && hi >= 2) fn(2);
    uint64_t start = std::max<uint64_t>(lo, 3);
    if (start % 2 == 0) ++start;
    std::vector<uint8_t> mark;
    for (uint64_t seg = start; seg <= hi; seg += 2 * kSegmentSpan) {
        const uint64_t span = std::min<uint64_t>(kSegmentSpan, (hi - seg) / 2 + 1);
        sieve_segment(seg, static_cast<std::size_t>(span), base.primes(), mark, fn);
    }
}

namespace {

constexpr char kCacheMagic[8] = {'P', 'C', 'P', 'R', 'I', 'M', 'E', '1'};

uint64_t fnv1a(const uint8_t* data, std::size_t n) {
    uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    return h;
}

void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint64_t get_u64(const uint8_t* p) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(p[i]) << (8 * i);
    return v;
}

bool trial_division_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

bool save_prime_cache(const PrimeTable& table, const std::filesystem::path& path) {
    std::vector<uint8_t> payload;
    payload.reserve(8 * table.size());
    uint64_t prev = 0;
    for (uint64_t p : table.primes()) {
        put_u64(payload, p - prev);
        prev = p;
    }

    std::vector<uint8_t> out;
    out.insert(out.end(), kCacheMagic, kCacheMagic + 8);
    put_u64(out, table.limit());
    put_u64(out, table.size());
    put_u64(out, fnv1a(payload.data(), payload.size()));
    out.insert(out.end(), payload.begin(), payload.end());

    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) return false;
        f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
        if (!f) return false;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    return !ec;
}

std::optional<PrimeTable> load_prime_cache(const std::filesystem::path& path, uint64_t limit) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (data.size() < 32 || std::memcmp(data.data(), kCacheMagic, 8) != 0) return std::nullopt;

    const uint64_t file_limit = get_u64(data.data() + 8);
    const uint64_t count = get_u64(data.data() + 16);
    const uint64_t checksum = get_u64(data.data() + 24);
    if (file_limit != limit) return std::nullopt;
    if (data.size() != 32 + 8 * count) return std::nullopt;
    if (fnv1a(data.data() + 32, data.size() - 32) != checksum) return std::nullopt;

    std::vector<uint64_t> primes;
    primes.reserve(static_cast<std::size_t>(count));
    uint64_t prev = 0;
    for (uint64_t k = 0; k < count; ++k) {
        const uint64_t delta = get_u64(data.data() + 32 + 8 * k);
        if (delta == 0) return std::nullopt;
        prev += delta;
        if (prev > limit) return std::nullopt;
        primes.push_back(prev);
    }
    if (primes.empty() || primes.front() != 2) return std::nullopt;

    // spot primality revalidation on a deterministic sample
    const std::size_t step = std::max<std::size_t>(1, primes.size() / 32);
    for (std::size_t k = 0; k < primes.size(); k += step)
        if (!trial_division_prime(primes[k])) return std::nullopt;
    if (!trial_division_prime(primes.back())) return std::nullopt;

    return PrimeTable(std::move(primes), limit);
}

} // namespace primecert

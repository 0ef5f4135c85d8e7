#include <benchmark/benchmark.h>

#include "primecert/certificates.hpp"
#include "primecert/densities.hpp"
#include "primecert/oracle.hpp"
#include "primecert/tail.hpp"

using namespace primecert;

static void BM_Sieve2M(benchmark::State& state) {
    for (auto _ : state) {
        PrimeTable t = PrimeTable::sieve(2'000'000);
        benchmark::DoNotOptimize(t.size());
    }
}
BENCHMARK(BM_Sieve2M)->Unit(benchmark::kMillisecond);

static void BM_SymmetricRowRanges(benchmark::State& state) {
    const PrimeTable t = PrimeTable::sieve(31500);
    const std::size_t count = t.pi(31397);
    for (auto _ : state) {
        SymmetricRow row(47);
        for (std::size_t i = 1; i <= count; ++i) row.advance_prime(t.prime(i));
        benchmark::DoNotOptimize(row.ratio(47));
    }
}
BENCHMARK(BM_SymmetricRowRanges)->Unit(benchmark::kMillisecond);

static void BM_LogEnclosure(benchmark::State& state) {
    const Rational x(8'600'001);
    const Rational w(1, 1'000'000'000);
    for (auto _ : state) benchmark::DoNotOptimize(log_enclosure(x, w));
}
BENCHMARK(BM_LogEnclosure);

static void BM_LogLogPow10(benchmark::State& state) {
    const Rational w(1, 1'000'000'000);
    for (auto _ : state) benchmark::DoNotOptimize(loglog_pow10(71298, w));
}
BENCHMARK(BM_LogLogPow10);

static void BM_ExactCSum(benchmark::State& state) {
    const PrimeTable t = PrimeTable::sieve(200'000);
    for (auto _ : state) benchmark::DoNotOptimize(enclose_C(t, 199'999).interval.lo().sign());
}
BENCHMARK(BM_ExactCSum)->Unit(benchmark::kMillisecond);

static void BM_Census7(benchmark::State& state) {
    const PrimeTable t = PrimeTable::sieve(30);
    for (auto _ : state) benchmark::DoNotOptimize(census(7, t).counts[0]);
}
BENCHMARK(BM_Census7)->Unit(benchmark::kMillisecond);

static void BM_CrtBlock101(benchmark::State& state) {
    const PrimeTable t = PrimeTable::sieve(200);
    for (auto _ : state) benchmark::DoNotOptimize(sgn(build_crt_block(101, t).a));
}
BENCHMARK(BM_CrtBlock101);

static void BM_ThresholdSweep(benchmark::State& state) {
    const PrimeTable t = PrimeTable::sieve(11'000);
    for (auto _ : state) benchmark::DoNotOptimize(threshold_consistency_sweep(10, 10'000, t).checked);
}
BENCHMARK(BM_ThresholdSweep)->Unit(benchmark::kMillisecond);

static void BM_RecordDigits(benchmark::State& state) {
    const PrimeTable t = PrimeTable::sieve(43103);
    for (auto _ : state) {
        const RecordInput rec = twin_record();
        benchmark::DoNotOptimize(decimal_digits(rec.value));
    }
    (void)t;
}
BENCHMARK(BM_RecordDigits)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

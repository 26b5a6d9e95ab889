#include <sepr/catalog.hpp>
#include <sepr/search.hpp>

#include <benchmark/benchmark.h>

using namespace sepr;

namespace {

HermitianMatrix sample_matrix(int n, long long radicand) {
    search::GenSpec spec;
    spec.n = n;
    spec.kind = search::EntryKind::rationals;
    spec.bound = 3;
    spec.radicand = radicand;
    spec.seed = 17;
    return search::random_hermitian(spec, 0);
}

void BM_MinorTable(benchmark::State& state) {
    HermitianMatrix m = sample_matrix(static_cast<int>(state.range(0)), 0);
    for (auto _ : state) {
        MinorTable t = MinorTable::compute(m);
        benchmark::DoNotOptimize(t.sign(t.full_mask()));
    }
}
BENCHMARK(BM_MinorTable)->DenseRange(4, 9);

void BM_MinorTableRadical(benchmark::State& state) {
    HermitianMatrix m = sample_matrix(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        MinorTable t = MinorTable::compute(m);
        benchmark::DoNotOptimize(t.sign(t.full_mask()));
    }
}
BENCHMARK(BM_MinorTableRadical)->DenseRange(4, 7);

void BM_Determinant(benchmark::State& state) {
    HermitianMatrix m = sample_matrix(static_cast<int>(state.range(0)), 0);
    for (auto _ : state) {
        QExt d = m.determinant();
        benchmark::DoNotOptimize(d.sign());
    }
}
BENCHMARK(BM_Determinant)->DenseRange(4, 12)->RangeMultiplier(2);

void BM_RuleScreen(benchmark::State& state) {
    // full candidate screening at order n
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rep = search::enumerate_candidates(n, MatrixClass::hermitian, 6);
        benchmark::DoNotOptimize(rep.unattainable.size());
    }
}
BENCHMARK(BM_RuleScreen)->DenseRange(3, 5);

void BM_VerifyCatalog(benchmark::State& state) {
    for (auto _ : state) {
        auto rep = catalog::verify_catalog();
        benchmark::DoNotOptimize(rep.entries_checked);
    }
}
BENCHMARK(BM_VerifyCatalog);

void BM_IdentitySuite(benchmark::State& state) {
    HermitianMatrix m = sample_matrix(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        auto rep = search::check_identities(m);
        benchmark::DoNotOptimize(rep.all_pass());
    }
}
BENCHMARK(BM_IdentitySuite)->DenseRange(3, 5);

}  // namespace

BENCHMARK_MAIN();

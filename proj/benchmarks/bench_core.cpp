#include <benchmark/benchmark.h>

#include "qchan/bounds.hpp"
#include "qchan/entropy.hpp"
#include "qchan/verify.hpp"

using namespace qchan;

namespace {

void BM_HermitianEigenvalues4(benchmark::State& state) {
    const ComplexMatrix m = choi(random_cptp(3, 11), QubitBasis::plus_minus()).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigenvalues(m));
    }
}
BENCHMARK(BM_HermitianEigenvalues4);

void BM_ChoiBuild(benchmark::State& state) {
    const KrausChannel channel = random_cptp(4, 12);
    const QubitBasis basis = random_basis(13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(choi(channel, basis));
    }
}
BENCHMARK(BM_ChoiBuild);

void BM_CheckRelationRel(benchmark::State& state) {
    const KrausChannel channel = random_cptp(2, 14);
    const QubitBasis b1 = random_basis(15);
    const QubitBasis b2 = random_basis(16);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_relation(channel, b1, b2, Measure::RelativeEntropy));
    }
}
BENCHMARK(BM_CheckRelationRel);

void BM_MinimizeG(benchmark::State& state) {
    const double step = state.range(0) == 0 ? 1e-2 : 1e-3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimize_g_bruteforce(0.75, step));
    }
}
BENCHMARK(BM_MinimizeG)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FalsifyTheorem1(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_falsification(Target::Theorem1, 100, 7, 1));
    }
}
BENCHMARK(BM_FalsifyTheorem1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

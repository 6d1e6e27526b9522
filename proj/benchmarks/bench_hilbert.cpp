#include <benchmark/benchmark.h>
#include <ordfan/ordfan.hpp>

using namespace ordfan;

static void BM_hilbert_function(benchmark::State& state) {
    auto sig = make_signature(3);
    std::vector<Monomial> gens;
    for (int i = 0; i < int(state.range(0)); ++i) {
        gens.push_back(Monomial({i + 1, int(state.range(0)) - i, 1}));
    }
    auto I = MonomialIdeal::from_generators(sig, gens);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hilbert_function(I, 8));
    }
}
BENCHMARK(BM_hilbert_function)->Arg(4)->Arg(8)->Arg(12);

static void BM_hilbert_polynomial(benchmark::State& state) {
    auto sig = make_signature(2);
    auto I = MonomialIdeal::from_generators(
        sig, {Monomial({3, 0}), Monomial({2, 2}), Monomial({0, 4})});
    for (auto _ : state) {
        benchmark::DoNotOptimize(hilbert_polynomial_and_index(I));
    }
}
BENCHMARK(BM_hilbert_polynomial);

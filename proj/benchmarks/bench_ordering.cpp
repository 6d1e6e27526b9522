#include <benchmark/benchmark.h>
#include <ordfan/ordfan.hpp>

using namespace ordfan;

static void BM_matrix_compare(benchmark::State& state) {
    MatrixOrdering ord = MatrixOrdering::grevlex(int(state.range(0)));
    auto mons = monomials_of_degree(int(state.range(0)), 6);
    size_t i = 0;
    for (auto _ : state) {
        const Monomial& a = mons[i % mons.size()];
        const Monomial& b = mons[(i * 7 + 3) % mons.size()];
        benchmark::DoNotOptimize(ord.compare(a, b));
        ++i;
    }
}
BENCHMARK(BM_matrix_compare)->Arg(2)->Arg(4);

static void BM_metric_distance(benchmark::State& state) {
    OrderingSpec a(MatrixOrdering::lex(2));
    OrderingSpec b(MatrixOrdering::grevlex(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(metric_distance(a, b, int(state.range(0))));
    }
}
BENCHMARK(BM_metric_distance)->Arg(4)->Arg(8);

static void BM_classify_table(benchmark::State& state) {
    auto sig = make_signature({"x", "y"});
    OrderingSpec ord = parse_ordering(
        "table D=3 deg1=(y,x) deg2=(y^2,x*y,x^2) deg3=(y^3,x*y^2,x^2*y,x^3) fallback=grlex",
        sig);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(ord, int(state.range(0))));
    }
}
BENCHMARK(BM_classify_table)->Arg(3)->Arg(4);

#include <benchmark/benchmark.h>
#include <ordfan/ordfan.hpp>

using namespace ordfan;

namespace {

Signature sig3() {
    static Signature s = make_signature({"x", "y", "z"});
    return s;
}

IdealSpec katsura2() {
    auto A = AlgebraPresentation::commutative(sig3());
    return IdealSpec(A, {parse_polynomial("x + 2*y + 2*z - 1", sig3()),
                         parse_polynomial("x^2 + 2*y^2 + 2*z^2 - x", sig3()),
                         parse_polynomial("2*x*y + 2*y*z - y", sig3())});
}

}  // namespace

static void BM_buchberger_katsura2(benchmark::State& state) {
    auto L = katsura2();
    OrderingSpec ord(MatrixOrdering::grevlex(3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce_gb(buchberger(L, ord)));
    }
}
BENCHMARK(BM_buchberger_katsura2);

static void BM_division(benchmark::State& state) {
    auto sig = make_signature({"x", "y"});
    auto A = AlgebraPresentation::commutative(sig);
    OrderingSpec ord(MatrixOrdering::lex(2));
    Polynomial a = parse_polynomial("x^5*y^3 + x^2*y^4 + x*y + y^2 + 1", sig);
    std::vector<Polynomial> F = {parse_polynomial("x*y - 1", sig),
                                 parse_polynomial("y^2 - 1", sig)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(divide(a, F, ord, A));
    }
}
BENCHMARK(BM_division);

static void BM_weyl_product(benchmark::State& state) {
    auto sig = make_signature({"x", "dx"});
    auto W = AlgebraPresentation::weyl(sig, {{0, 1}});
    Polynomial a = parse_polynomial("x^2*dx^3 + x*dx + 1", sig, true);
    Polynomial b = parse_polynomial("x^3*dx^2 + dx^2 + x", sig, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(normal_form_product(W, a, b));
    }
}
BENCHMARK(BM_weyl_product);

static void BM_fan_sweep(benchmark::State& state) {
    auto sig = make_signature({"x", "y"});
    auto A = AlgebraPresentation::commutative(sig);
    IdealSpec L(A, {parse_polynomial("x*y - 1", sig), parse_polynomial("y^2 - 1", sig)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_leading_ideals_admissible(L, int(state.range(0))));
    }
}
BENCHMARK(BM_fan_sweep)->Arg(2)->Arg(4);

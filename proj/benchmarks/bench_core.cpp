#include <benchmark/benchmark.h>

#include "pefo/classify.hpp"
#include "pefo/evaluate.hpp"
#include "pefo/fixtures.hpp"
#include "pefo/formula_parser.hpp"
#include "pefo/lattice.hpp"
#include "pefo/qe.hpp"
#include "pefo/theta.hpp"

using namespace pefo;

static void BM_EnumerateShops(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_shops(n, 4));
}
BENCHMARK(BM_EnumerateShops)->Arg(2)->Arg(3)->Arg(4);

static void BM_SheMonoidK3(benchmark::State& state) {
    const Structure k3 = fixture("clique", {3});
    for (auto _ : state) benchmark::DoNotOptimize(she_monoid(k3));
}
BENCHMARK(BM_SheMonoidK3);

static void BM_Closure(benchmark::State& state) {
    const Shop gen = Shop::parse("(1|0|012)");
    for (auto _ : state) benchmark::DoNotOptimize(Dsm::closure(3, {gen}));
}
BENCHMARK(BM_Closure);

static void BM_Lattice(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_dsms(n));
}
BENCHMARK(BM_Lattice)->Arg(2)->Arg(3);

static void BM_Classify(benchmark::State& state) {
    const Structure b = fixture("k2_plus_k1", {});
    for (auto _ : state) benchmark::DoNotOptimize(classify(b));
}
BENCHMARK(BM_Classify);

static void BM_BruteEvaluate(benchmark::State& state) {
    const Structure k3 = fixture("clique", {3});
    const FormulaPtr sentence =
        parse_formula("forall u forall v exists w (E(u,w) & E(v,w))");
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_bruteforce(k3, sentence));
}
BENCHMARK(BM_BruteEvaluate);

static void BM_EngineEvaluate(benchmark::State& state) {
    const Structure b = fixture("k2_plus_k1", {});
    const Engine engine = select_engine(she_monoid(b));
    const FormulaPtr sentence =
        parse_formula("forall u exists v exists w (E(u,v) | E(v,w))");
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(b, sentence, engine));
}
BENCHMARK(BM_EngineEvaluate);

static void BM_TupleTypeExtension(benchmark::State& state) {
    const Structure k3 = fixture("clique", {3});
    const FormulaPtr theta = theta_tuple(k3, {0, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(extension(k3, theta, theta_free_vars(2)));
}
BENCHMARK(BM_TupleTypeExtension);

static void BM_CanonicalizeA(benchmark::State& state) {
    const Shop f = Shop::parse("(012|2|1)");
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize_a(f));
}
BENCHMARK(BM_CanonicalizeA);

BENCHMARK_MAIN();

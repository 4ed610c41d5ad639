#include <benchmark/benchmark.h>

#include "kht/checks.hpp"
#include "kht/enumerate.hpp"
#include "kht/eval.hpp"
#include "kht/model.hpp"
#include "kht/power.hpp"
#include "kht/tripos.hpp"

using namespace kht;

static void BM_EnumerateTopologies(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_topologies(n));
}
BENCHMARK(BM_EnumerateTopologies)->Arg(3)->Arg(4);

static void BM_ProductOpens(benchmark::State& state) {
  auto tops = all_topologies(3);
  const auto& x = tops[5 % tops.size()];
  for (auto _ : state) {
    Product p = product(x, x);
    benchmark::DoNotOptimize(p.space->opens());
  }
}
BENCHMARK(BM_ProductOpens);

static void BM_PowerObject(benchmark::State& state) {
  SpaceRef a = nth_discrete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(power_object(a));
}
BENCHMARK(BM_PowerObject)->Arg(4)->Arg(8);

static void BM_EqualityPredicate(benchmark::State& state) {
  SpaceRef x = nth_discrete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(equality_predicate(x));
}
BENCHMARK(BM_EqualityPredicate)->Arg(3)->Arg(4);

static void BM_AdjointChain(benchmark::State& state) {
  SpaceRef a = nth_discrete(3), b = nth_discrete(3);
  ContMap f(a, b, {0, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(check_adjoint_chain(f));
}
BENCHMARK(BM_AdjointChain);

static void BM_BeckChevalleySquare(benchmark::State& state) {
  SpaceRef x = nth_discrete(3);
  ContMap k(nth_discrete(3), nth_discrete(2), {0, 1, 0});
  PullbackSquare sq = beck_chevalley_square(x, k);
  for (auto _ : state) benchmark::DoNotOptimize(check_beck_chevalley(sq));
}
BENCHMARK(BM_BeckChevalleySquare);

static void BM_EvalFormula(benchmark::State& state) {
  Model m;
  m.spaces.push_back(discrete_space("X", {"a", "b", "c", "d"}));
  Bits phi(4);
  phi.set(0);
  phi.set(2);
  m.predicates.push_back({"phi", Predicate(m.spaces[0], phi)});
  for (auto _ : state) {
    Interp interp(m);
    benchmark::DoNotOptimize(
        eval_text("forall x : X . forall y : X . x = y and phi(x) implies phi(y)", "", interp));
  }
}
BENCHMARK(BM_EvalFormula);

static void BM_ParseFormula(benchmark::State& state) {
  const std::string text =
      "forall x : X . (exists s : P(X) . x in s and (forall y : X . x = y implies y in s))";
  for (auto _ : state) benchmark::DoNotOptimize(parse_formula(text));
}
BENCHMARK(BM_ParseFormula);

BENCHMARK_MAIN();

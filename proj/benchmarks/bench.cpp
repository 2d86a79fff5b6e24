#include <benchmark/benchmark.h>

#include "prefrep/families.hpp"
#include "prefrep/generators.hpp"
#include "prefrep/pcqa.hpp"
#include "prefrep/repair.hpp"

using namespace prefrep;

namespace {

Generated single_fd(std::size_t facts, std::uint64_t seed = 7) {
  RandomProfile p;
  p.shape = RandomShape::kSingleFd;
  p.facts = facts;
  p.density = 0.5;
  return random_ctx(seed, p);
}

// (f0 OR NOT f1) AND f2 over instance facts.
Query cnf_query(const Context& ctx) {
  auto lit = [&](std::size_t i, bool pos) {
    const auto& f = ctx.instance()[i % ctx.instance().size()];
    Atom a{f.relation, {}};
    for (const auto& v : f.tuple) a.terms.emplace_back(v);
    auto at = Formula::atom(a);
    return pos ? at : Formula::negation(at);
  };
  return Query::make(ctx.schema(),
                     Formula::conjunction({Formula::disjunction({lit(0, true), lit(1, false)}), lit(2, true)}));
}

void BM_AllRepairs(benchmark::State& state) {
  auto g = single_fd(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_repair_sets(g.ctx.graph()));
}
BENCHMARK(BM_AllRepairs)->Arg(8)->Arg(12)->Arg(16);

void BM_PreferredFamily(benchmark::State& state) {
  auto g = single_fd(12);
  auto family = static_cast<Family>(state.range(0));
  state.SetLabel(std::string(to_string(family)));
  for (auto _ : state) benchmark::DoNotOptimize(preferred_repair_sets(g.ctx, family));
}
BENCHMARK(BM_PreferredFamily)
    ->Arg(static_cast<int>(Family::kGlobal))
    ->Arg(static_cast<int>(Family::kPareto))
    ->Arg(static_cast<int>(Family::kCommon));

void BM_PcqaGeneric(benchmark::State& state) {
  auto g = single_fd(static_cast<std::size_t>(state.range(0)));
  auto q = cnf_query(g.ctx);
  for (auto _ : state) benchmark::DoNotOptimize(pcqa_generic(g.ctx, Family::kGlobal, q));
}
BENCHMARK(BM_PcqaGeneric)->Arg(8)->Arg(12)->Arg(16);

void BM_PcqaSingleFd(benchmark::State& state) {
  auto g = single_fd(static_cast<std::size_t>(state.range(0)));
  auto q = cnf_query(g.ctx);
  for (auto _ : state) benchmark::DoNotOptimize(pcqa_single_fd(g.ctx, Family::kGlobal, q));
}
BENCHMARK(BM_PcqaSingleFd)->Arg(8)->Arg(12)->Arg(16)->Arg(64)->Arg(256);

void BM_CounterGlobal(benchmark::State& state) {
  auto c = counter_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(preferred_repair_sets(c.ctx, Family::kGlobal));
}
BENCHMARK(BM_CounterGlobal)->DenseRange(1, 4);

void BM_BuildGlobalRepair(benchmark::State& state) {
  auto g = single_fd(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_global_repair(g.ctx));
}
BENCHMARK(BM_BuildGlobalRepair)->Arg(16)->Arg(64);

void BM_BuildCommonRepair(benchmark::State& state) {
  auto g = single_fd(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_common_repair(g.ctx));
}
BENCHMARK(BM_BuildCommonRepair)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();

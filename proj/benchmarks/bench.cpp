#include <benchmark/benchmark.h>

#include <set>

#include "ltsd/aut_io.hpp"
#include "ltsd/decompose_async.hpp"
#include "ltsd/decompose_sync.hpp"
#include "ltsd/equivalence.hpp"
#include "ltsd/generator.hpp"
#include "ltsd/lts.hpp"

namespace {

ltsd::lts make_input(ltsd::state_id states) {
  ltsd::generator_params params;
  params.states = states;
  params.actions = 4;
  params.density = 1.5;
  params.seed = 7;
  return ltsd::generate(params);
}

// First half of the alphabet against the rest, in label order.
ltsd::alphabet_partition half_split(const ltsd::lts& m) {
  std::set<ltsd::action> sigma1, sigma2;
  std::size_t i = 0;
  for (const ltsd::action& a : m.alphabet())
    (i++ < m.alphabet().size() / 2 ? sigma1 : sigma2).insert(a);
  return ltsd::alphabet_partition::over(m, sigma1, sigma2);
}

void bm_decompose_sync(benchmark::State& state) {
  ltsd::lts m = make_input(static_cast<ltsd::state_id>(state.range(0)));
  ltsd::alphabet_partition p = half_split(m);
  for (auto _ : state) benchmark::DoNotOptimize(ltsd::decomp_s(m, p));
}
BENCHMARK(bm_decompose_sync)->Arg(8)->Arg(32)->Arg(128);

void bm_compose_sync(benchmark::State& state) {
  ltsd::lts m = make_input(static_cast<ltsd::state_id>(state.range(0)));
  ltsd::sync_decomposition d = ltsd::decomp_s(m, half_split(m));
  for (auto _ : state) benchmark::DoNotOptimize(ltsd::compose_sync(d));
}
BENCHMARK(bm_compose_sync)->Arg(8)->Arg(32)->Arg(128);

void bm_decompose_async_flatten(benchmark::State& state) {
  ltsd::lts m = make_input(static_cast<ltsd::state_id>(state.range(0)));
  ltsd::alphabet_partition p = half_split(m);
  for (auto _ : state) {
    ltsd::async_decomposition d = ltsd::decomp_a(m, p);
    benchmark::DoNotOptimize(ltsd::flatten(d.m1));
    benchmark::DoNotOptimize(ltsd::flatten(d.m2));
  }
}
BENCHMARK(bm_decompose_async_flatten)->Arg(8)->Arg(32);

void bm_check_round_trip(benchmark::State& state) {
  ltsd::lts m = make_input(static_cast<ltsd::state_id>(state.range(0)));
  ltsd::lts product = ltsd::compose_sync(ltsd::decomp_s(m, half_split(m))).system;
  for (auto _ : state) benchmark::DoNotOptimize(ltsd::branching_bisim(m, product));
}
BENCHMARK(bm_check_round_trip)->Arg(8)->Arg(32);

void bm_parse_write(benchmark::State& state) {
  std::string text = ltsd::write_aut(make_input(static_cast<ltsd::state_id>(state.range(0))));
  for (auto _ : state) {
    ltsd::lts parsed = ltsd::parse_aut(text);
    benchmark::DoNotOptimize(ltsd::write_aut(parsed));
  }
}
BENCHMARK(bm_parse_write)->Arg(32)->Arg(256);

}  // namespace

BENCHMARK_MAIN();

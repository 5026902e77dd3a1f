#include <benchmark/benchmark.h>

#include "hksym/admissibility.hpp"
#include "hksym/catalog.hpp"
#include "hksym/extract.hpp"
#include "hksym/symplectic.hpp"

using namespace hksym;

static void BM_BuildExample1(benchmark::State& state) {
  const ExtensionInput in = example1();
  for (auto _ : state) benchmark::DoNotOptimize(build_extension(in));
}
BENCHMARK(BM_BuildExample1)->Unit(benchmark::kMillisecond);

static void BM_BuildExample2(benchmark::State& state) {
  const ExtensionInput in = example2(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_extension(in));
}
BENCHMARK(BM_BuildExample2)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_VerifyExample1(benchmark::State& state) {
  const HyperKahlerTriple t = build_extension(example1());
  for (auto _ : state) benchmark::DoNotOptimize(verify_triple(t));
}
BENCHMARK(BM_VerifyExample1)->Unit(benchmark::kMillisecond);

static void BM_SignatureExample1(benchmark::State& state) {
  const HyperKahlerTriple t = build_extension(example1());
  for (auto _ : state) benchmark::DoNotOptimize(signature_minus(t));
}
BENCHMARK(BM_SignatureExample1)->Unit(benchmark::kMillisecond);

static void BM_AdmissibleExample1(benchmark::State& state) {
  const ExtensionInput in = example1();
  for (auto _ : state) benchmark::DoNotOptimize(check_admissible(in));
}
BENCHMARK(BM_AdmissibleExample1)->Unit(benchmark::kMillisecond);

static void BM_ExtractExample1(benchmark::State& state) {
  const HyperKahlerTriple t = build_extension(example1());
  for (auto _ : state) benchmark::DoNotOptimize(extract_canonical(t));
}
BENCHMARK(BM_ExtractExample1)->Unit(benchmark::kMillisecond);

static void BM_Tangent(benchmark::State& state) {
  const HyperKahlerTriple t = build_extension(example1());
  const int times = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tangent_iterate(t, times));
}
BENCHMARK(BM_Tangent)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Crux(benchmark::State& state) {
  const ac::SymplecticSpace e = ac::ac_builtin_space();
  const ac::SymPoly s = ac::ac_builtin();
  for (auto _ : state) benchmark::DoNotOptimize(ac::check_crux(e, s));
}
BENCHMARK(BM_Crux)->Unit(benchmark::kMillisecond);

static void BM_Tameness(benchmark::State& state) {
  const ac::SymplecticSpace e = ac::ac_builtin_space();
  const ac::SymPoly s = ac::ac_builtin();
  for (auto _ : state) benchmark::DoNotOptimize(ac::tameness(e, s));
}
BENCHMARK(BM_Tameness)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

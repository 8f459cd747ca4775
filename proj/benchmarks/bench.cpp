#include <benchmark/benchmark.h>

#include <random>

#include "swl/complexes.hpp"
#include "swl/coxeter.hpp"
#include "swl/redgraph.hpp"
#include "swl/tensors.hpp"

using namespace swl;

namespace {

const char* kTypes[] = {"A3", "B3", "H3", "A4", "D4", "A5"};

void BM_EnumerateLongest(benchmark::State& state) {
  auto sys = CoxeterSystem::parse(kTypes[state.range(0)]);
  std::uint64_t n = 0;
  for (auto _ : state) {
    n = for_each_reduced_word(sys, sys.longest_element(), [](const Word&) { return true; });
    benchmark::DoNotOptimize(n);
  }
  state.SetLabel(kTypes[state.range(0)]);
  state.counters["words"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateLongest)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SpectrumAggregate(benchmark::State& state) {
  const char* types[] = {"A4", "D4", "A5", "B4", "D5"};
  auto sys = CoxeterSystem::parse(types[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(abelian_spectrum(sys, sys.longest_element()));
  state.SetLabel(types[state.range(0)]);
}
BENCHMARK(BM_SpectrumAggregate)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SpectrumStreaming(benchmark::State& state) {
  auto sys = CoxeterSystem::parse(kTypes[state.range(0)]);
  for (auto _ : state)
    benchmark::DoNotOptimize(abelian_spectrum(sys, sys.longest_element(), SpectrumMode::Streaming));
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_SpectrumStreaming)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_BuildGraph(benchmark::State& state) {
  auto sys = CoxeterSystem::parse(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(sys, sys.longest_element()));
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_BuildGraph)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

// random tensor with degree bound d for the lex-first reduced word of w_0
struct DetCase {
  Word v;
  ParameterTensor p;
};

DetCase det_case(const char* type, int d) {
  auto sys = CoxeterSystem::parse(type);
  std::mt19937_64 rng(11);
  return {sys.lex_first_reduced_word(sys.longest_element()),
          ParameterTensor::random(sys.longest_length(), sys.rank(), d, rng)};
}

void BM_DetFactored(benchmark::State& state) {
  const char* type = state.range(0) == 0 ? "A3" : "B3";
  DetCase c = det_case(type, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(det_via_theorem_B(c.v, c.p));
  state.SetLabel(type);
}
BENCHMARK(BM_DetFactored)->Args({0, 3})->Args({0, 4})->Args({1, 4})->Unit(benchmark::kMillisecond);

void BM_DetBareiss(benchmark::State& state) {
  const char* type = state.range(0) == 0 ? "A3" : "B3";
  DetCase c = det_case(type, static_cast<int>(state.range(1)));
  PolyMatrix m = model_matrix(c.v, c.p);
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(m));
  state.SetLabel(type);
}
// B3 is out of reach for polynomial Bareiss: intermediate minors get too large
BENCHMARK(BM_DetBareiss)->Args({0, 3})->Args({0, 4})->Unit(benchmark::kMillisecond);

void BM_DetExpansion(benchmark::State& state) {
  const char* type = state.range(0) == 0 ? "A3" : "B3";
  DetCase c = det_case(type, static_cast<int>(state.range(1)));
  PolyMatrix m = model_matrix(c.v, c.p);
  for (auto _ : state) benchmark::DoNotOptimize(det_expansion(m));
  state.SetLabel(type);
}
BENCHMARK(BM_DetExpansion)->Args({0, 3})->Args({0, 4})->Args({1, 4})->Unit(benchmark::kMillisecond);

void BM_SignatureCheck(benchmark::State& state) {
  auto b2 = CoxeterSystem::parse("B2");
  Word p = cyclic_b2_word(static_cast<int>(state.range(0)));
  std::vector<Rational> x;
  for (std::size_t i = 1; i <= p.size(); ++i) x.emplace_back(static_cast<long>(i));
  GaleMatrixData data = curve_gale_data(example_model4_tensor(), p, x);
  for (auto _ : state) benchmark::DoNotOptimize(check_signature_matrix(data, b2));
}
BENCHMARK(BM_SignatureCheck)->DenseRange(1, 5, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

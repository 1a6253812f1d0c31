#include <benchmark/benchmark.h>

#include <altlab/altlab.hpp>

using namespace altlab;

namespace {

ComplexMatrix draw(SampleKind kind, std::size_t n, std::uint64_t index) {
  SampleSpec s;
  s.kind = kind;
  s.dim = n;
  s.campaign_seed = 1;
  s.index = index;
  return sample(s);
}

void BM_HermitianEig(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const HermitianMatrix h(draw(SampleKind::kHermitian, n, 0));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(2, 32);

void BM_Svd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = draw(SampleKind::kGeneral, n, 0);
  for (auto _ : state) benchmark::DoNotOptimize(svd(x));
}
BENCHMARK(BM_Svd)->RangeMultiplier(2)->Range(2, 32);

void BM_SandwichEigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PsdMatrix a(draw(SampleKind::kPsd, n, 0));
  const PsdMatrix b(draw(SampleKind::kPsd, n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(sandwich_eigenvalues(a, b));
}
BENCHMARK(BM_SandwichEigenvalues)->RangeMultiplier(2)->Range(2, 32);

void BM_CheckAlt(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PsdMatrix a(draw(SampleKind::kPsd, n, 0));
  const PsdMatrix b(draw(SampleKind::kPsd, n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(check_alt(a, b, 0.5, 2.0));
}
BENCHMARK(BM_CheckAlt)->RangeMultiplier(2)->Range(2, 32);

void BM_CheckGeneral(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = draw(SampleKind::kGeneral, n, 0);
  const auto b = draw(SampleKind::kGeneral, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_general(a, b, 2.0, SchattenIndex(2.0)));
}
BENCHMARK(BM_CheckGeneral)->RangeMultiplier(2)->Range(2, 16);

void BM_Probe(benchmark::State& state) {
  ProbeOptions o;
  o.id = IneqId::kWaterwine;
  o.dim = static_cast<std::size_t>(state.range(0));
  o.budget = 200;
  for (auto _ : state) benchmark::DoNotOptimize(probe_tightness(o));
}
BENCHMARK(BM_Probe)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Campaign(benchmark::State& state) {
  auto c = default_campaign_config();
  c.ineqs = {IneqId::kWaterwine};
  c.dims = {4};
  c.samples = 10;
  c.threads = 1;
  for (auto _ : state) {
    run_campaign(c, [](const CampaignRecord& r) { benchmark::DoNotOptimize(r.index); });
  }
}
BENCHMARK(BM_Campaign)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

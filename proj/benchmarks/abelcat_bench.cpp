#include <benchmark/benchmark.h>

#include "abelcat/diagram.hpp"
#include "abelcat/fgab.hpp"
#include "abelcat/genprop.hpp"
#include "abelcat/intlin.hpp"

namespace {

using namespace abelcat;

intlin::IntMatrix random_matrix(genprop::Rng& rng, std::size_t n) {
  intlin::IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.between(-100, 100);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  genprop::Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<intlin::IntMatrix> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_matrix(rng, n));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(intlin::smith_normal_form(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_Kernel(benchmark::State& state) {
  genprop::GenConfig cfg;
  cfg.max_rank = static_cast<std::size_t>(state.range(0));
  cfg.max_order = 0;
  genprop::Rng rng(2);
  std::vector<fgab::GroupHom> homs;
  for (int i = 0; i < 64; ++i)
    homs.push_back(genprop::random_hom(genprop::random_object(cfg, rng), genprop::random_object(cfg, rng), rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(fgab::kernel(homs[i++ % homs.size()]));
}
BENCHMARK(BM_Kernel)->Arg(2)->Arg(4)->Arg(6);

void BM_VerifyShortFive(benchmark::State& state) {
  genprop::GenConfig cfg;
  cfg.scheme = static_cast<genprop::Scheme>(state.range(0));
  genprop::Rng rng(3);
  std::vector<SesLadder<fgab::GroupHom>> ladders;
  for (int i = 0; i < 32; ++i) ladders.push_back(genprop::gen_ladder(cfg, ShortFiveMode::Iso, rng));
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_short_five(fgab::FgAb{}, ladders[i++ % ladders.size()], ShortFiveMode::Iso));
}
BENCHMARK(BM_VerifyShortFive)->Arg(0)->Arg(1)->Arg(2);

void BM_ShortFiveTrace(benchmark::State& state) {
  genprop::GenConfig cfg;
  genprop::Rng rng(4);
  std::vector<SesLadder<fgab::GroupHom>> ladders;
  for (int i = 0; i < 32; ++i) ladders.push_back(genprop::gen_ladder(cfg, ShortFiveMode::Monic, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(short_five_trace(fgab::FgAb{}, ladders[i++ % ladders.size()]));
}
BENCHMARK(BM_ShortFiveTrace);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "hopf_fusion/builtins.hpp"
#include "hopf_fusion/grothendieck.hpp"
#include "hopf_fusion/rep.hpp"
#include "hopf_fusion/semisimple.hpp"
#include "hopf_fusion/smash.hpp"

namespace hf = hopf_fusion;

namespace {

hf::HopfAlgebra over_gf49(const std::string& name) {
  hf::HopfAlgebra h = hf::make_builtin(name, 7);
  auto [field, emb] = hf::extend_field(h.field(), 2);
  return h.change_field(emb);
}

void BM_FieldMultiply(benchmark::State& state) {
  hf::FieldPtr f = hf::Field::construct(7, unsigned(state.range(0)));
  hf::FieldElement x = f->generator(), acc = f->one();
  for (auto _ : state) {
    acc *= x;
    acc += x;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMultiply)->Arg(1)->Arg(2)->Arg(4);

void BM_Rank(benchmark::State& state) {
  hf::FieldPtr f = hf::Field::construct(7, 2);
  const std::size_t n = std::size_t(state.range(0));
  hf::Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = f->element(std::uint32_t((i * 31 + j * 17 + i * j) % 49));
  for (auto _ : state)
    benchmark::DoNotOptimize(hf::rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(64)->Arg(128);

void BM_BlockDecomposition(benchmark::State& state, const char* name) {
  hf::HopfAlgebra h = over_gf49(name);
  for (auto _ : state)
    benchmark::DoNotOptimize(hf::block_decomposition(h));
}
BENCHMARK_CAPTURE(BM_BlockDecomposition, kS3, "kS3");
BENCHMARK_CAPTURE(BM_BlockDecomposition, kD4, "kD4");

void BM_BuildSmash(benchmark::State& state, const char* name) {
  hf::HopfAlgebra h = over_gf49(name);
  for (auto _ : state)
    benchmark::DoNotOptimize(hf::build_smash(h));
}
BENCHMARK_CAPTURE(BM_BuildSmash, kS3, "kS3");
BENCHMARK_CAPTURE(BM_BuildSmash, kD4, "kD4");

void BM_SmashFusionTable(benchmark::State& state, const char* name) {
  hf::HopfAlgebra h = over_gf49(name);
  hf::IntegralPair ip = hf::compute_integrals(h);
  hf::BlockData blocks = hf::block_decomposition(h);
  hf::VElement v = hf::compute_v(h, ip, blocks, hf::compute_u(h, ip));
  hf::SmashAlgebra sm = hf::build_smash(h);
  hf::FieldElement psi = hf::primitive_root_of_unity(*h.field(), std::uint64_t(sm.n()));
  auto chars = hf::enumerate_simples(sm, blocks, v, psi);
  for (auto _ : state)
    benchmark::DoNotOptimize(hf::smash_fusion_table(sm, chars, blocks.size()));
}
BENCHMARK_CAPTURE(BM_SmashFusionTable, kS3, "kS3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SmashFusionTable, kD4, "kD4")->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();

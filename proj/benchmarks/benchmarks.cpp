#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "chainprof/certificate.hpp"
#include "chainprof/constructions.hpp"
#include "chainprof/poset.hpp"
#include "chainprof/profile.hpp"
#include "chainprof/search.hpp"

namespace {

chainprof::Poset chain(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return chainprof::Poset::from_cover_edges(n, std::move(edges));
}

void BM_chain_construction(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    chainprof::Poset p = chain(n);
    benchmark::DoNotOptimize(p);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_chain_construction)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);

void BM_verify_bare_chain(benchmark::State& state) {
  std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
  chainprof::CompressedPoset cert;
  cert.m = m;
  cert.mprime_positions = {1, m};
  chainprof::ChainProfile s{m};
  for (auto _ : state) benchmark::DoNotOptimize(chainprof::verify(cert, s, m));
}
BENCHMARK(BM_verify_bare_chain)->Arg(1000)->Arg(1000000)->Arg(1000000000);

void BM_profile_matrix(benchmark::State& state) {
  chainprof::ChainProfile s;
  for (std::uint64_t c = 2; c < 2 + static_cast<std::uint64_t>(state.range(0)); ++c)
    s.add(c);
  chainprof::Poset p = chainprof::trivial_construction(s);
  for (auto _ : state) benchmark::DoNotOptimize(chainprof::profile_matrix(p));
}
BENCHMARK(BM_profile_matrix)->DenseRange(4, 16, 4);

void BM_canonical_form(benchmark::State& state) {
  std::vector<chainprof::Poset> posets = chainprof::enumerate_posets(6);
  for (auto _ : state)
    for (const chainprof::Poset& p : posets)
      benchmark::DoNotOptimize(chainprof::canonical_form(p));
}
BENCHMARK(BM_canonical_form);

void BM_enumerate_posets(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chainprof::enumerate_posets(n));
}
BENCHMARK(BM_enumerate_posets)->DenseRange(4, 7, 1);

void BM_compress(benchmark::State& state) {
  chainprof::Poset p = chain(static_cast<int>(state.range(0)));
  chainprof::ElementSet m_chain = chainprof::max_chain(p);
  for (auto _ : state) benchmark::DoNotOptimize(chainprof::compress(p, m_chain));
}
BENCHMARK(BM_compress)->Range(1 << 10, 1 << 20);

}  // namespace

BENCHMARK_MAIN();

// Serial reference vs OpenMP kernels on square grid nets and on relaxation batches.

#include <benchmark/benchmark.h>

#include <cmath>
#include <string>
#include <vector>

#include "geonet/builder.hpp"
#include "geonet/kernels.hpp"
#include "geonet/relax.hpp"

namespace {

using namespace geonet;

// side x side grid, outer ring pinned, interior slightly perturbed.
EmbeddedNet grid_net(int side) {
  std::vector<VertexSpec> verts;
  std::vector<Edge> edges;
  PointMap pos;
  auto name = [](int i, int j) { return "g" + std::to_string(i) + "_" + std::to_string(j); };
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const bool rim = i == 0 || j == 0 || i == side - 1 || j == side - 1;
      verts.push_back({name(i, j), rim ? VertexKind::boundary : VertexKind::interior});
      pos[name(i, j)] = {j + 0.1 * std::sin(i * 1.3 + j), i + 0.1 * std::cos(j * 0.7 + i)};
      if (i + 1 < side) edges.push_back(make_edge(name(i, j), name(i + 1, j)));
      if (j + 1 < side) edges.push_back(make_edge(name(i, j), name(i, j + 1)));
    }
  }
  return EmbeddedNet(NetTopology(std::move(verts), std::move(edges)), pos);
}

template <bool Parallel>
void BM_UnitSums(benchmark::State& state) {
  const EmbeddedNet net = grid_net(static_cast<int>(state.range(0)));
  const auto& targets = net.topology().interior();
  std::vector<Point> out(targets.size());
  for (auto _ : state) {
    const std::size_t bad = Parallel ? kernels::unit_sums_omp(net.topology(), net.positions(), targets, out, 1e-12)
                                     : kernels::unit_sums_serial(net.topology(), net.positions(), targets, out, 1e-12);
    benchmark::DoNotOptimize(bad);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(targets.size()));
}

template <bool Parallel>
void BM_OverlapScan(benchmark::State& state) {
  const EmbeddedNet net = grid_net(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto found = Parallel ? kernels::overlap_scan_omp(net, 1e-6) : kernels::overlap_scan_serial(net, 1e-6);
    benchmark::DoNotOptimize(found.data());
  }
}

template <Backend B>
void BM_RelaxBatch(benchmark::State& state) {
  const EmbeddedNet exact = build_net25(solve_angles()).net;
  std::vector<EmbeddedNet> nets;
  for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(state.range(0)); ++s) {
    nets.push_back(jitter_interior(exact, 0.05, s));
  }
  RelaxConfig cfg;
  cfg.tol_balance = 1e-8;
  for (auto _ : state) {
    auto out = relax_batch(nets, cfg, B);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_UnitSums<false>)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(BM_UnitSums<true>)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(BM_OverlapScan<false>)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_OverlapScan<true>)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_RelaxBatch<Backend::serial>)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RelaxBatch<Backend::openmp>)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

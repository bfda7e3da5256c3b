// OpenMP batch vs serial schedule vs the scalar reference, 50-point batches.
#include <benchmark/benchmark.h>

#include "reference.hpp"
#include "robench/engine.hpp"
#include "robench/random.hpp"

namespace {

using namespace robench;

constexpr std::size_t kBatch = 50;

std::vector<double> points(std::size_t dim) {
  RandomStream rng(derive_stream_key({0x50, dim}));
  std::vector<double> out(kBatch * dim);
  for (auto& v : out) v = rng.uniform(-100, 100);
  return out;
}

void run_engine(benchmark::State& state, Schedule schedule) {
  const auto fn = function_from_int(static_cast<int>(state.range(0)));
  const auto dim = static_cast<std::size_t>(state.range(1));
  EngineConfig cfg;
  cfg.dim = dim;
  cfg.max_concurrency = kBatch;
  cfg.schedule = schedule;
  const Engine engine(cfg);
  const auto pts = points(dim);
  std::vector<double> out(kBatch);
  for (auto _ : state) {
    engine.evaluate_into(fn, {pts, dim}, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kBatch));
}

void BM_Parallel(benchmark::State& state) { run_engine(state, Schedule::Parallel); }
void BM_Serial(benchmark::State& state) { run_engine(state, Schedule::Serial); }

void BM_Reference(benchmark::State& state) {
  const auto fn = function_from_int(static_cast<int>(state.range(0)));
  const auto dim = static_cast<std::size_t>(state.range(1));
  const Engine engine(EngineConfig{dim, kBatch, 1, Precision::Double});
  ref::Data data;
  {
    const auto& inst = engine.instance(fn);
    data.fn = to_int(fn);
    data.shift = inst.shift;
    data.perm = inst.blocks.permutation;
    std::function<ref::Data(const Instance&)> conv = [&](const Instance& in) {
      ref::Data d;
      d.fn = to_int(in.function);
      d.shift = in.shift;
      d.perm = in.blocks.permutation;
      for (const auto& q : in.blocks.blocks) {
        ref::Mat m(q.rows(), ref::Vec(q.cols()));
        for (std::size_t r = 0; r < q.rows(); ++r) {
          for (std::size_t c = 0; c < q.cols(); ++c) m[r][c] = q(r, c);
        }
        d.blocks.push_back(std::move(m));
      }
      for (const auto& c : in.components) d.comps.push_back(conv(c));
      return d;
    };
    data = conv(inst);
  }
  const auto pts = points(dim);
  for (auto _ : state) {
    for (std::size_t i = 0; i < kBatch; ++i) {
      const ref::Vec x(pts.begin() + i * dim, pts.begin() + (i + 1) * dim);
      benchmark::DoNotOptimize(ref::eval(data, x));
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kBatch));
}

void args(benchmark::internal::Benchmark* b) {
  for (int fn : {0, 9, 14, 17, 26, 28, 36}) {
    for (int dim : {10, 32, 64, 96}) b->Args({fn, dim});
  }
}

}  // namespace

BENCHMARK(BM_Parallel)->Apply(args);
BENCHMARK(BM_Serial)->Apply(args);
BENCHMARK(BM_Reference)->Apply(args);

BENCHMARK_MAIN();

// Serial reference vs OpenMP kernels: region search and the Ext box.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "multireg/cohomology.hpp"
#include "multireg/io.hpp"
#include "multireg/parallel.hpp"
#include "multireg/regularity.hpp"

using namespace multireg;

namespace {

Presentation data_module(const std::string& name) {
  std::ifstream in(std::string(MULTIREG_BENCH_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  ModuleInput m = parse_input(ss.str());
  return m.kind == ModuleInput::Kind::Ideal ? Presentation::quotient(m.ring, m.ideal) : m.module;
}

const Presentation& hyperelliptic() {
  static const Presentation M = data_module("hyperelliptic.mr");
  return M;
}

// state.range(0): 0 = serial reference sweep, 1 = parallel waves on one thread,
// 2 = parallel waves with the OpenMP default thread count.
void BM_RegionSearch(benchmark::State& state) {
  RegionSearchOptions opts;
  opts.serial_reference = state.range(0) == 0;
  opts.threads = state.range(0) == 2 ? 0 : 1;
  const DegreeBox box{{0, 0}, {9, 9}};
  std::size_t evaluated = 0;
  for (auto _ : state) {
    auto res = truncation_region(hyperelliptic(), RegionMode::Q, box, opts);
    evaluated = res.evaluated;
    benchmark::DoNotOptimize(res.region);
  }
  state.counters["threads"] = resolve_threads(opts.threads);
  state.counters["truncations"] = double(evaluated);
}
BENCHMARK(BM_RegionSearch)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

// state.range(0): thread count passed to ext_box (0 = OpenMP default).
void BM_ExtBox(benchmark::State& state) {
  static const GradedModule G(data_module("not_linear.mr"));
  const DegreeBox box{{-3, -3}, {4, 4}};
  for (auto _ : state) {
    auto dims = ext_box(G, box, 4, 3, PowerKind::Frobenius, int(state.range(0)));
    benchmark::DoNotOptimize(dims);
  }
  state.counters["threads"] = resolve_threads(int(state.range(0)));
}
BENCHMARK(BM_ExtBox)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "lgf/green_plane.hpp"
#include "lgf/oracle.hpp"
#include "lgf/slit_square.hpp"
#include "lgf/triangular.hpp"
#include "lgf/trunk.hpp"

using namespace lgf;

namespace {

void BM_RingMultiply(benchmark::State& st) {
  const RingElem x = RingElem::make(2, Rational(-169, 128), Rational(9, 8));
  const RingElem y = RingElem::make(2, Rational(3, 7), Rational(-5, 11), Rational(2, 3), Rational(1, 9));
  for (auto _ : st) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_RingMultiply);

// fresh table each time, so the whole fill is timed
void BM_PotentialFill(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) {
    PotentialTable t;
    benchmark::DoNotOptimize(t.at({n, n / 2}));
  }
}
BENCHMARK(BM_PotentialFill)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_HalfPlaneFill(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) {
    GHTable t;
    benchmark::DoNotOptimize(t.at({n, n}));
  }
}
BENCHMARK(BM_HalfPlaneFill)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SeriesSqrtInv(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(tri_delta_plus(n));
}
BENCHMARK(BM_SeriesSqrtInv)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_TrunkTable(benchmark::State& st) {
  const int r = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(trunk_table({-r, r, -r, r}));
}
BENCHMARK(BM_TrunkTable)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ExactFiniteSolve(benchmark::State& st) {
  const FiniteProblem p = slit_square_problem(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(exact_green_solve(p, {0, 0}, {1, 1}));
}
BENCHMARK(BM_ExactFiniteSolve)->Arg(6)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_WilsonTrunkStrip(benchmark::State& st) {
  FiniteProblem strip;
  strip.boundary = Boundary::wired_strip;
  strip.box = std::array<int, 4>{-17, 16, -16, 16};
  const std::vector<TreeEdge> q{{{0, 0}, Dir::E}};
  uint64_t seed = 1;
  for (auto _ : st) benchmark::DoNotOptimize(wilson_sample(strip, {true, {-1, 0}, {0, 0}}, seed++, 500, q));
}
BENCHMARK(BM_WilsonTrunkStrip)->Unit(benchmark::kMillisecond);

void BM_Quadrature(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(quadrature_green(Lattice::square, {7, 3}));
}
BENCHMARK(BM_Quadrature)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

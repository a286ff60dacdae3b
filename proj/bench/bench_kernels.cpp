// Serial reference vs OpenMP kernel, same inputs. Run with OMP_NUM_THREADS set
// to compare thread counts.

#include <benchmark/benchmark.h>

#include <random>

#include "fjt/cfunction.hpp"
#include "fjt/kernels.hpp"

using namespace fjt;

namespace {

const CartanType kTypes[] = {{Family::E, 7}, {Family::A, 24}, {Family::D, 24}};

const CartanType& type_arg(const benchmark::State& state) { return kTypes[state.range(0)]; }

template <bool Parallel>
void BM_PositiveRoots(benchmark::State& state) {
  const IntMatrix a = cartan_matrix(type_arg(state));
  for (auto _ : state) {
    auto roots = Parallel ? kernels::positive_roots(a) : kernels::serial::positive_roots(a);
    benchmark::DoNotOptimize(roots);
  }
  state.SetLabel(type_arg(state).name());
}

WeylElement random_word(const RootSystem& rs, int length) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> letter(0, rs.rank() - 1);
  WeylElement w;
  for (int k = 0; k < length; ++k) w.word.push_back(letter(rng));
  return w;
}

template <bool Parallel>
void BM_InversionMask(benchmark::State& state) {
  const RootSystem rs(type_arg(state));
  const WeylElement w = random_word(rs, 64);
  for (auto _ : state) {
    auto mask = Parallel ? kernels::inversion_mask(rs, w) : kernels::serial::inversion_mask(rs, w);
    benchmark::DoNotOptimize(mask);
  }
  state.SetLabel(rs.type().name());
}

template <bool Parallel>
void BM_AffinePairings(benchmark::State& state) {
  const RootSystem rs(type_arg(state));
  const int node = rs.type().family == Family::E ? 6 : rs.rank() / 2 - 1;
  const auto chi = degenerate_character(rs, node);
  std::vector<Root> radical;
  for (const Root& a : rs.positive_roots())
    if (a.coords[node] > 0) radical.push_back(a);
  for (auto _ : state) {
    auto p = Parallel ? kernels::affine_pairings(rs, chi.slope, chi.offset, radical)
                      : kernels::serial::affine_pairings(rs, chi.slope, chi.offset, radical);
    benchmark::DoNotOptimize(p);
  }
  state.SetLabel(rs.type().name());
}

template <bool Parallel>
void BM_LedgerOrders(benchmark::State& state) {
  const ZetaProduct zp = closed_form_c(static_cast<int>(state.range(0)), 8);
  std::vector<Rational> points;
  for (int k = -4000; k <= 4000; ++k) points.push_back(Rational(k, 2));
  const auto profile = ZetaProfile::real();
  for (auto _ : state) {
    auto orders = Parallel ? kernels::ledger_orders(zp, profile, points)
                           : kernels::serial::ledger_orders(zp, profile, points);
    benchmark::DoNotOptimize(orders);
  }
}

}  // namespace

BENCHMARK(BM_PositiveRoots<false>)->DenseRange(0, 2);
BENCHMARK(BM_PositiveRoots<true>)->DenseRange(0, 2);
BENCHMARK(BM_InversionMask<false>)->DenseRange(0, 2);
BENCHMARK(BM_InversionMask<true>)->DenseRange(0, 2);
BENCHMARK(BM_AffinePairings<false>)->DenseRange(0, 2);
BENCHMARK(BM_AffinePairings<true>)->DenseRange(0, 2);
BENCHMARK(BM_LedgerOrders<false>)->Arg(3)->Arg(12);
BENCHMARK(BM_LedgerOrders<true>)->Arg(3)->Arg(12);

BENCHMARK_MAIN();

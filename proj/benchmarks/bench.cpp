#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "owb/blowup.hpp"
#include "owb/chart.hpp"
#include "owb/groebner.hpp"
#include "owb/lattice.hpp"
#include "owb/spin.hpp"
#include "owb/subsets.hpp"

namespace {

using namespace owb;

std::vector<std::string> x_names_with_pi(long i) {
  std::vector<std::string> names;
  long m = 2 * i + 1;
  for (long r = 1; r <= m; ++r)
    for (long c = 1; c <= m; ++c)
      names.push_back("x" + std::to_string(r) + std::to_string(c));
  names.push_back("pi");
  return names;
}

void BM_bounded_rank_basis(benchmark::State& state) {
  GF gf(32003);
  Ring<GF> R(gf, x_names_with_pi(1));
  auto gens = ri_gens<GF>(R, 1);
  auto ord = MonomialOrder::grevlex();
  for (auto _ : state) {
    auto gb = groebner(R, gens, ord);
    benchmark::DoNotOptimize(gb.polys.data());
  }
}
BENCHMARK(BM_bounded_rank_basis)->Unit(benchmark::kMillisecond);

void BM_paired_minor_build(benchmark::State& state) {
  long i = state.range(0);
  RingQ R = x_ring(i);
  for (auto _ : state) {
    auto gens = spin_ideal_gens(R, i, 1);
    benchmark::DoNotOptimize(gens.data());
  }
}
BENCHMARK(BM_paired_minor_build)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_orbit_enumeration(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto orbits = subset_orbits(n, static_cast<long>(n) / 2);
    benchmark::DoNotOptimize(orbits.data());
  }
}
BENCHMARK(BM_orbit_enumeration)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_oracle_equality(benchmark::State& state) {
  for (auto _ : state) {
    bool ok = oracle_matches_spin(3, 1, 1, Budget{});
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_oracle_equality)->Unit(benchmark::kMillisecond);

void BM_blowup_case_check(benchmark::State& state) {
  for (auto _ : state) {
    bool ok = verify_case_simplification("y22", 1);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_blowup_case_check)->Unit(benchmark::kMillisecond);

void BM_lift_membership(benchmark::State& state) {
  auto R = lattice_ring();
  std::size_t n = static_cast<std::size_t>(state.range(0));
  long i = static_cast<long>(n) / 2;
  for (auto _ : state) {
    auto lift = lift_point(R, n, i, i);
    bool ok = check_naive(R, lift, CoeffRing::local);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_lift_membership)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// Microbenchmarks for the hot paths: alcove reduction, orbit representatives,
// arrow-order decisions, and wall-crossing products.

#include <benchmark/benchmark.h>

#include <memory>

#include "alcove/oracle.hpp"
#include "alcove/tilting.hpp"

using namespace alcove;

namespace {

Weight wt(std::vector<long long> c) { return weight_from_ll(std::move(c)); }

void BM_reduce_to_C(benchmark::State& state) {
  RootSystem rs = parse_root_system("B2");
  Weight far = wt({61, -47});
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_C(rs, far, 7).rep);
}
BENCHMARK(BM_reduce_to_C);

void BM_d_value(benchmark::State& state) {
  RootSystem rs = parse_root_system("B2");
  Weight far = wt({61, -47});
  for (auto _ : state) benchmark::DoNotOptimize(d_value(rs, far, 7));
}
BENCHMARK(BM_d_value);

void BM_uparrow(benchmark::State& state) {
  RootSystem rs = parse_root_system("A2");
  Weight mu = wt({0, 0}), lambda = wt({13, 8});
  for (auto _ : state) benchmark::DoNotOptimize(uparrow_leq(rs, mu, lambda, 5));
}
BENCHMARK(BM_uparrow);

void BM_orbit_rep(benchmark::State& state) {
  auto rs = std::make_shared<const RootSystem>(parse_root_system("B2"));
  LeviDatum L = make_levi(rs, {0, 1}, 7);
  Weight far = wt({33, 19});
  for (auto _ : state) benchmark::DoNotOptimize(orbit_rep(far, L).rep);
}
BENCHMARK(BM_orbit_rep);

void BM_orbit_count(benchmark::State& state) {
  auto rs = std::make_shared<const RootSystem>(parse_root_system("B2"));
  LeviDatum L = make_levi(rs, {0, 1}, 7);
  Weight reg = wt({1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(N_I(reg, L));
}
BENCHMARK(BM_orbit_count);

void BM_theta_product(benchmark::State& state) {
  auto rs = std::make_shared<const RootSystem>(parse_root_system("A1"));
  LeviDatum L = make_levi(rs, {}, 5);
  ReducedWord word = domexp_word(wt({20}), L);
  for (auto _ : state) benchmark::DoNotOptimize(theta_product_char(word, L).terms.size());
}
BENCHMARK(BM_theta_product);

void BM_brute_coset_orbit(benchmark::State& state) {
  auto rs = std::make_shared<const RootSystem>(parse_root_system("B2"));
  LeviDatum L = make_levi(rs, {0, 1}, 7);
  Weight reg = wt({1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(brute_coset_orbit_count(reg, L));
}
BENCHMARK(BM_brute_coset_orbit);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "omegap/oracle.hpp"
#include "omegap/pairing.hpp"
#include "omegap/theorem.hpp"

using namespace omegap;

namespace {

std::vector<std::pair<PAdicScalar, PAdicScalar>> random_pairs(long p, size_t n) {
  std::mt19937_64 rng(7);
  Prime prime(p);
  std::uniform_int_distribution<long> dv(-6, 6);
  std::uniform_int_distribution<long> du(1, 200);
  auto unit = [&] {
    long a = du(rng), b = du(rng);
    while (a % p == 0) a = du(rng);
    while (b % p == 0) b = du(rng);
    return mpq_class(a, b);
  };
  std::vector<std::pair<PAdicScalar, PAdicScalar>> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    out.emplace_back(PAdicScalar(prime, unit() * pow_p(p, dv(rng))),
                     PAdicScalar(prime, unit() * pow_p(p, dv(rng))));
  }
  return out;
}

void BM_pairing(benchmark::State& state) {
  auto pairs = random_pairs(state.range(0), 256);
  size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(pairing(x, y));
  }
}
BENCHMARK(BM_pairing)->Arg(2)->Arg(3)->Arg(5);

void BM_pairing_digit_sum(benchmark::State& state) {
  auto pairs = random_pairs(state.range(0), 256);
  size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[i++ % pairs.size()];
    auto [lo, hi] = pairing_window(x, y);
    benchmark::DoNotOptimize(pairing_digit_sum(x, y, lo, hi));
  }
}
BENCHMARK(BM_pairing_digit_sum)->Arg(2)->Arg(3)->Arg(5);

void BM_charfn_eval(benchmark::State& state) {
  Prime p(3);
  auto [mu1, mu2] = build_counterexample(p, 2, mpq_class(1, 2));
  auto pairs = random_pairs(3, 256);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(charfn_eval(mu1, pairs[i++ % pairs.size()].first));
  }
}
BENCHMARK(BM_charfn_eval);

void BM_check_independence(benchmark::State& state) {
  Prime p(state.range(0));
  auto [mu1, mu2] = build_counterexample(p, 2, mpq_class(1, 2));
  PAdicScalar alpha(p, pow_p(p.value(), 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_independence(mu1, mu2, alpha));
  }
}
BENCHMARK(BM_check_independence)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_oracle_check(benchmark::State& state) {
  Prime p(state.range(0));
  auto [mu1, mu2] = build_counterexample(p, 2, mpq_class(1, 2));
  PAdicScalar alpha(p, pow_p(p.value(), 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_check(mu1, mu2, alpha));
  }
}
BENCHMARK(BM_oracle_check)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_family_sweep_case(benchmark::State& state) {
  Prime p(2);
  auto pairs = family_pairs(standard_family(p));
  PAdicScalar alpha(p, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_case(alpha, pairs));
  }
}
BENCHMARK(BM_family_sweep_case)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

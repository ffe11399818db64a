#include <benchmark/benchmark.h>

#include "mps/canonical.hpp"
#include "mps/constructions.hpp"
#include "mps/search.hpp"
#include "mps/unitary_param.hpp"

using namespace mps;

namespace {

void BM_SearchAll(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Rational d(state.range(1), 2);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(n, d).matrices.size());
}
BENCHMARK(BM_SearchAll)->Args({6, 4})->Args({7, 5})->Args({8, 6})->Unit(benchmark::kMillisecond);

void BM_SearchCanonical(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SearchOptions opt;
  opt.mode = SearchMode::up_to_equivalence;
  for (auto _ : state)
    for (const Rational& d : candidate_ratios(n)) benchmark::DoNotOptimize(exhaustive_search(n, d, opt).matrices.size());
}
BENCHMARK(BM_SearchCanonical)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntegerMps m = full_j_exact(n);
  CanonicalOptions opt{n};
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(m, opt).form.n());
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 10, 2);

void BM_CanonicalFormFano(benchmark::State& state) {
  const IntegerMps m = *construct({Family::design_real, 14, Rational(2), std::nullopt}).exact;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(m, CanonicalOptions{14}).form.n());
}
BENCHMARK(BM_CanonicalFormFano)->Unit(benchmark::kMillisecond);

void BM_Construct(benchmark::State& state) {
  const auto family = static_cast<Family>(state.range(0));
  const std::size_t n = 30;
  const auto iv = admissible_interval(family, n, with_default_aux(family, n, std::nullopt, {}));
  if (!iv) {
    state.SkipWithError("family not available at n = 30");
    return;
  }
  Rational d;
  Rational::try_snap(iv->hi, 2, 1e-9, d);
  for (auto _ : state) benchmark::DoNotOptimize(construct({family, n, d, std::nullopt}).d);
  state.SetLabel(std::string(family_name(family)));
}
BENCHMARK(BM_Construct)
    ->Arg(static_cast<int>(Family::full_j))
    ->Arg(static_cast<int>(Family::upper_interval))
    ->Arg(static_cast<int>(Family::hadamard_core))
    ->Arg(static_cast<int>(Family::complex_core))
    ->Arg(static_cast<int>(Family::design_complex));

void BM_HermitianRoundTrip(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t m = n / 2;
  CMatrix t(m, n - m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n - m; ++j) t(i, j) = Complex(0.1 * static_cast<double>(i + 1), 0.05 * static_cast<double>(j));
  const HermitianUnitaryParam p{n, m, t, Permutation::identity(n)};
  for (auto _ : state) benchmark::DoNotOptimize(build_hermitian_unitary(decompose_hermitian_unitary(build_hermitian_unitary(p))).n());
}
BENCHMARK(BM_HermitianRoundTrip)->RangeMultiplier(2)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();

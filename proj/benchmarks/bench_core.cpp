#include "epc/corridor/design.hpp"
#include "epc/corridor/leading.hpp"
#include "epc/corridor/regions.hpp"
#include "epc/exactpoly/roots.hpp"
#include "epc/models/es_model.hpp"
#include "epc/models/hamiltonians.hpp"
#include "epc/spectra/pseudospectrum.hpp"
#include "epc/spectra/spectrum.hpp"

#include <benchmark/benchmark.h>

using namespace epc;

namespace {

PerturbationSpec designed(int n) {
    std::vector<Rational> roots;
    for (int i = 0; i < n; ++i) roots.push_back(Rational(2 * i - (n - 1)));
    return design_perturbation(roots);
}

void BM_LeadingSecular(benchmark::State& state) {
    const PerturbationSpec v = designed(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(leading_secular({v.n, Rational(0)}, v));
}
BENCHMARK(BM_LeadingSecular)->DenseRange(3, 7);

void BM_SymbolicSecular(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(symbolic_leading_secular(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SymbolicSecular)->DenseRange(3, 8);

void BM_ClassifyCounts(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PerturbationSpec v{n, PerturbationKind::Bounded, {{{n, 1}, Rational(1)}}};
    const ScaledMatrix h = build_hamiltonian({n, Rational(0)}, v);
    SpectrumOptions opts;
    opts.counts_only = true;
    for (auto _ : state) benchmark::DoNotOptimize(classify_reality(h, Rational(1, 1000), opts));
}
BENCHMARK(BM_ClassifyCounts)->DenseRange(3, 8);

void BM_ClassifyWithEigenvalues(benchmark::State& state) {
    const PerturbationSpec v = designed(static_cast<int>(state.range(0)));
    const ScaledMatrix h = build_hamiltonian({v.n, Rational(0)}, v);
    for (auto _ : state) benchmark::DoNotOptimize(classify_reality(h, Rational(1, 1000)));
}
BENCHMARK(BM_ClassifyWithEigenvalues)->DenseRange(3, 6);

void BM_ChainSpectrum(benchmark::State& state) {
    ESParams p;
    p.couplings = {Rational(2), Rational(9, 5), Rational(8, 5), Rational(7, 5)};
    p.g = Rational(1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(classify_polynomial(es_characteristic_polynomial(p)));
}
BENCHMARK(BM_ChainSpectrum);

void BM_CubicRegion(benchmark::State& state) {
    std::vector<Rational> rho, gamma;
    const int k = static_cast<int>(state.range(0));
    for (int i = 1; i <= k; ++i) rho.push_back(Rational(2 * i, k));
    for (int i = 0; i < k; ++i) gamma.push_back(Rational(-20) + Rational(40 * i, k - 1));
    for (auto _ : state) benchmark::DoNotOptimize(lemma1_region(rho, gamma));
}
BENCHMARK(BM_CubicRegion)->Arg(25)->Arg(51);

void BM_Pseudospectrum(benchmark::State& state) {
    const Matrix<long double> h = to_numeric(es_ep_limit(8).at(Rational(1)));
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pseudospectrum(h, {-2, 2, -2, 2}, k, k));
}
BENCHMARK(BM_Pseudospectrum)->Arg(21)->Arg(41);

}  // namespace
BENCHMARK_MAIN();

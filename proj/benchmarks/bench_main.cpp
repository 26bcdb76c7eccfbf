#include <benchmark/benchmark.h>

#include "fcart/cartier.hpp"
#include "fcart/invariants.hpp"
#include "fcart/parse.hpp"
#include "fcart/random.hpp"

using namespace fcart;

namespace {

Polynomial cusp(const RingPtr& r) { return parse_polynomial("x^2+y^3", r); }

void BM_Buchberger(benchmark::State& state) {
    const fp_t p = 7;
    auto ring = make_ring(p, {"x", "y"});
    Rng rng(91);
    std::vector<std::vector<Polynomial>> inputs;
    for (int i = 0; i < 32; ++i)
        inputs.push_back({rng.polynomial(ring, int(state.range(0)), 6),
                          rng.polynomial(ring, int(state.range(0)), 6),
                          rng.polynomial(ring, int(state.range(0)), 6)});
    std::size_t i = 0;
    for (auto _ : state) {
        auto gb = buchberger(inputs[i % inputs.size()], MonomialOrder{});
        benchmark::DoNotOptimize(gb);
        ++i;
    }
}
BENCHMARK(BM_Buchberger)->Arg(3)->Arg(5)->Arg(8);

void BM_RootDecompose(benchmark::State& state) {
    auto ring = make_ring(7, {"x", "y"});
    Polynomial f = cusp(ring).pow(state.range(0));
    for (auto _ : state) {
        auto dec = root_decompose(f, 49);
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(BM_RootDecompose)->Arg(8)->Arg(48)->Arg(240);

void BM_CartierPowerImage(benchmark::State& state) {
    auto ring = make_ring(7, {"x", "y"});
    CartierStructure S = standard_cartier(ring);
    Ideal J(ring, {cusp(ring).pow(state.range(0))});
    for (auto _ : state) {
        Ideal img = cartier_power_image(S, J, 2);
        benchmark::DoNotOptimize(img.reduced_gb());
    }
}
BENCHMARK(BM_CartierPowerImage)->Arg(8)->Arg(48);

void BM_NuScanCusp(benchmark::State& state) {
    auto ring = make_ring(fp_t(state.range(0)), {"x", "y"});
    CartierStructure S = standard_cartier(ring);
    Ideal R = Ideal::unit(ring);
    Polynomial f = cusp(ring);
    for (auto _ : state) {
        NuLevelSet s = nu_set(S, R, f, 2);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_NuScanCusp)->Arg(2)->Arg(3)->Arg(7);

void BM_LucasBinomial(benchmark::State& state) {
    PadicRational alpha = make_padic(-5, 6, 7);
    std::int64_t n = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lucas_binomial(alpha, n % 3000));
        ++n;
    }
}
BENCHMARK(BM_LucasBinomial);

void BM_BsrCusp(benchmark::State& state) {
    auto ring = make_ring(7, {"x", "y"});
    CartierStructure S = standard_cartier(ring);
    Ideal R = Ideal::unit(ring);
    Polynomial f = cusp(ring);
    for (auto _ : state) {
        auto certs = bsr_roots(S, R, f, 2);
        benchmark::DoNotOptimize(certs);
    }
}
BENCHMARK(BM_BsrCusp);

} // namespace

BENCHMARK_MAIN();

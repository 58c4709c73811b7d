#include "cybundle/bundles.hpp"
#include "cybundle/toric.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cybundle;
using fga::IntMatrix;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937 rng(7);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    IntMatrix m = random_matrix(rng, n, 20);
    for (auto _ : state) benchmark::DoNotOptimize(fga::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_HermiteNormalForm(benchmark::State& state) {
    std::mt19937 rng(11);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    IntMatrix m = random_matrix(rng, n, 20);
    for (auto _ : state) benchmark::DoNotOptimize(fga::hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_ObstructionCheck(benchmark::State& state) {
    picard::ManifoldDescriptor c = picard::curve_of_genus(2);
    std::vector<picard::PicElement> classes;
    for (int j = 0; j < 3; ++j)
        classes.push_back(picard::make_pic_element(
            c, {Int(j + 1)}, {},
            {Rational(1, j + 2), Rational(0), Rational(j, 5), Rational(1, 2)}));
    bundles::PrincipalBundle b = bundles::whitney_sum_bundle(c, classes);
    for (auto _ : state) benchmark::DoNotOptimize(bundles::obstruction_check(b));
}
BENCHMARK(BM_ObstructionCheck);

void BM_AudinCox(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    toric::Fan f;
    f.dim = n;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> ray(n, Int(0));
        ray[i] = 1;
        f.rays.push_back(ray);
    }
    f.rays.push_back(std::vector<Int>(n, Int(-1)));
    for (std::size_t skip = 0; skip <= n; ++skip) {
        std::vector<std::size_t> cone;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != skip) cone.push_back(i);
        f.max_cones.push_back(cone);
    }
    picard::ManifoldDescriptor target = toric::descriptor_from_fan(f, "Pn");
    for (auto _ : state) benchmark::DoNotOptimize(toric::audin_cox_bundle(f, target));
}
BENCHMARK(BM_AudinCox)->Arg(2)->Arg(3)->Arg(4);

void BM_SurjectivityCertificate(benchmark::State& state) {
    bundles::PrincipalBundle b =
        bundles::construct_surjective_bundle(picard::curve_of_genus(2));
    for (auto _ : state) benchmark::DoNotOptimize(bundles::certify_surjectivity(b, 20));
}
BENCHMARK(BM_SurjectivityCertificate);

}  // namespace

BENCHMARK_MAIN();

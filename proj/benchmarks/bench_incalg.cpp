#include "incalg/decomposition.hpp"
#include "incalg/experiments.hpp"
#include "incalg/solver.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace incalg;

namespace {

IncidenceElement random_element(const AlgebraPtr &alg, std::mt19937_64 &rng)
{
	IncidenceElement f(alg);
	auto coeffs = random_coefficients(alg->ring(), alg->dimension(), rng);
	for (std::size_t id = 0; id < alg->dimension(); ++id)
		f.add_term(id, coeffs[id]);
	return f;
}

void BM_Convolution(benchmark::State &state)
{
	auto alg = IncidenceAlgebra::make(chain(state.range(0)), RingSpec::rationals());
	std::mt19937_64 rng(1);
	auto f = random_element(alg, rng);
	auto g = random_element(alg, rng);
	for (auto _ : state)
		benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_Convolution)->Arg(3)->Arg(6)->Arg(10);

void BM_SolveGjder(benchmark::State &state)
{
	auto ring = state.range(0) == 0 ? RingSpec::rationals() : RingSpec::mod(5);
	auto alg = IncidenceAlgebra::make(diamond(), ring);
	for (auto _ : state)
		benchmark::DoNotOptimize(solve(alg, MapClass::GeneralizedJordanDerivation));
}
BENCHMARK(BM_SolveGjder)->Arg(0)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State &state)
{
	auto alg = IncidenceAlgebra::make(diamond(), RingSpec::rationals());
	auto space = solve(alg, MapClass::GeneralizedJordanDerivation);
	std::mt19937_64 rng(2);
	auto pair = sample_pair(space, random_coefficients(alg->ring(), space.dimension(), rng));
	for (auto _ : state)
		benchmark::DoNotOptimize(certify(pair));
}
BENCHMARK(BM_Certify)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();

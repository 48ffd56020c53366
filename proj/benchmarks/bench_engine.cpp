// Microbenchmarks for the hot paths of the engine: canonical rational
// arithmetic, brackets, the exterior operators, and the involutivity
// procedures.  All fixtures are deterministic.
#include <benchmark/benchmark.h>

#include <vector>

#include "glacalc/algebra.hpp"
#include "glacalc/expr.hpp"
#include "glacalc/forms.hpp"
#include "glacalc/rng.hpp"
#include "glacalc/systems.hpp"

using namespace glacalc;

namespace {

RatFunc sample_ratfunc(std::uint64_t seed) {
  SplitMix64 rng(seed);
  return RatFunc(random_poly(rng, 2), random_poly_nonzero(rng, 2));
}

void BM_RatFuncMultiply(benchmark::State& state) {
  const RatFunc a = sample_ratfunc(1);
  const RatFunc b = sample_ratfunc(2);
  for (auto _ : state) {
    RatFunc c = a * b + a;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_RatFuncMultiply);

void BM_PolyGcd(benchmark::State& state) {
  const std::vector<std::string> vars = {"x", "y"};
  const Poly f = parse_ratfunc("(x+y+1)^3*(x-y)", vars).num();
  const Poly g = parse_ratfunc("(x+y+1)^2*(x+2)", vars).num();
  for (auto _ : state) {
    Poly d = Poly::gcd(f, g);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_PolyGcd);

void BM_Bracket(benchmark::State& state) {
  AlgebraPtr A = der_plus_f(2);
  SplitMix64 rng(7);
  const Element u = random_element(rng, A);
  const Element v = random_element(rng, A);
  for (auto _ : state) {
    Element w = bracket(u, v);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_Bracket);

void BM_Wedge(benchmark::State& state) {
  AlgebraPtr A = der_plus_f(3);
  SplitMix64 rng(11);
  const Form a = random_form(rng, A, 2);
  const Form b = random_form(rng, A, 2);
  for (auto _ : state) {
    Form w = wedge(a, b);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_Wedge);

void BM_ExtDiff(benchmark::State& state) {
  AlgebraPtr A = der_plus_f(3);
  SplitMix64 rng(13);
  const Form w = random_form(rng, A, 2);
  for (auto _ : state) {
    Form dw = ext_diff(w);
    benchmark::DoNotOptimize(dw);
  }
}
BENCHMARK(BM_ExtDiff);

void BM_LieDerivative(benchmark::State& state) {
  AlgebraPtr A = der_plus_f(3);
  SplitMix64 rng(17);
  const Element z = random_element(rng, A);
  const Form w = random_form(rng, A, 2);
  for (auto _ : state) {
    Form lw = lie_derivative(z, w);
    benchmark::DoNotOptimize(lw);
  }
}
BENCHMARK(BM_LieDerivative);

void BM_ValidateAxioms(benchmark::State& state) {
  AlgebraPtr A = der_plus_f(2);
  for (auto _ : state) {
    Report rep = validate_axioms(A, 4, 0);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_ValidateAxioms);

void BM_FrobeniusCertificate(benchmark::State& state) {
  AlgebraPtr H = heisenberg();
  const Subspace sub = make_subspace({basis_element(H, 0), basis_element(H, 2)});
  for (auto _ : state) {
    FrobeniusResult res = frobenius_certificate(sub);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_FrobeniusCertificate);

void BM_CartanEquivalence(benchmark::State& state) {
  AlgebraPtr A = der_plus_f(1);
  const Subspace sub = make_subspace(
      {basis_element(A, 0),
       make_element(A, {parse_ratfunc("x", A->vars()), parse_ratfunc("1", A->vars())})});
  for (auto _ : state) {
    CartanResult res = cartan_equivalence(sub);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_CartanEquivalence);

void BM_CohomologyDimensions(benchmark::State& state) {
  AlgebraPtr H = heisenberg();
  for (auto _ : state) {
    std::vector<int> dims = cohomology_dimensions(H);
    benchmark::DoNotOptimize(dims);
  }
}
BENCHMARK(BM_CohomologyDimensions);

}  // namespace

BENCHMARK_MAIN();

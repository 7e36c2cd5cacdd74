// Microbenchmarks for the hot paths: cyclotomic arithmetic through Hopf
// multiplication, ideal closures, the annihilator oracle and the Klein
// enumeration.

#include "rankone/ideals.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

using namespace rankone;

namespace {

DatumPtr klein() {
  static const DatumPtr d = GroupDatum::validate(
      FiniteGroup::abelian({2, 2}).with_labels({"1", "c", "b", "bc"}),
      CharacterTable::for_abelian(FiniteGroup::abelian({2, 2})), 3, 2, 0);
  return d;
}

DatumPtr taft(unsigned m) {
  static std::vector<DatumPtr> cache(8);
  if (!cache[m])
    cache[m] = GroupDatum::validate(FiniteGroup::abelian({m}),
                                    CharacterTable::for_abelian(FiniteGroup::abelian({m})), 1, 1, 0);
  return cache[m];
}

// splitmix64, same generator the tests use.
std::uint64_t mix(std::uint64_t& state) {
  std::uint64_t x = (state += 0x9e3779b97f4a7c15ULL);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

HopfElement random_element(const DatumPtr& d, std::uint64_t& state) {
  HopfElement a = HopfElement::zero(d);
  for (int t = 0; t < 4; ++t) {
    const unsigned l = static_cast<unsigned>(mix(state) % d->n());
    const int h = static_cast<int>(mix(state) % d->group().size());
    a.set_coeff(l, h, Cyclotomic(static_cast<long>(mix(state) % 7) - 3));
  }
  return a;
}

void BM_HopfMul(benchmark::State& state) {
  const DatumPtr d = taft(static_cast<unsigned>(state.range(0)));
  std::uint64_t seed = 42;
  const HopfElement a = random_element(d, seed);
  const HopfElement b = random_element(d, seed);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_HopfMul)->Arg(2)->Arg(3)->Arg(5);

void BM_IdealClosure(benchmark::State& state) {
  const DatumPtr d = taft(static_cast<unsigned>(state.range(0)));
  std::uint64_t seed = 7;
  const HopfElement gen = random_element(d, seed);
  for (auto _ : state) benchmark::DoNotOptimize(ideal_from_generators(d, {gen}));
}
BENCHMARK(BM_IdealClosure)->Arg(2)->Arg(3)->Arg(5);

void BM_NormalForm(benchmark::State& state) {
  const DatumPtr d = klein();
  std::vector<Cyclotomic> kg(4, Cyclotomic::zero());
  kg[0] = Cyclotomic(1);
  kg[2] = Cyclotomic(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(normal_form(d, {{1, kg}, {0, kg}}));
}
BENCHMARK(BM_NormalForm);

void BM_AnnihilatorOracle(benchmark::State& state) {
  const DatumPtr d = taft(static_cast<unsigned>(state.range(0)));
  const ModuleRep m = build_M(d, d->n(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(annihilator_oracle(m));
}
BENCHMARK(BM_AnnihilatorOracle)->Arg(2)->Arg(3)->Arg(4);

void BM_AnnihilatorFormula(benchmark::State& state) {
  const DatumPtr d = taft(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(annihilator_formula_M(d, d->n(), 0));
}
BENCHMARK(BM_AnnihilatorFormula)->Arg(2)->Arg(3)->Arg(4);

void BM_EnumerateKlein(benchmark::State& state) {
  const DatumPtr d = klein();
  for (auto _ : state) {
    const std::vector<Ideal> ideals = enumerate_ideals(d);
    if (ideals.size() != 49) state.SkipWithError("expected 49 ideals");
    benchmark::DoNotOptimize(ideals);
  }
}
BENCHMARK(BM_EnumerateKlein);

}  // namespace

BENCHMARK_MAIN();

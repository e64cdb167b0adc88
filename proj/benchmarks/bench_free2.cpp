#include <benchmark/benchmark.h>

#include <random>

#include "free2/automorphism.hpp"
#include "free2/classifier.hpp"
#include "free2/kpq_family.hpp"
#include "free2/structure.hpp"

namespace {

using namespace free2;

Word random_word(std::mt19937& rng, std::size_t len) {
  static const Letter alphabet[] = {Letter::x(), Letter::X(), Letter::y(),
                                    Letter::Y()};
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> s;
  while (s.size() < len) s.push_back(alphabet[pick(rng)]);
  return Word(s);
}

// Images of a random automorphism blow up words that minimize back down.
void BM_WhiteheadMinimize(benchmark::State& state) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> move(0, 6);
  Automorphism phi;
  for (int i = 0; i < state.range(0); ++i) phi = phi.then(kAllMoves[move(rng)]);
  const CyclicWord c = CyclicWord::of(phi(random_word(rng, 8)));
  for (auto _ : state) benchmark::DoNotOptimize(whitehead_minimize(c));
  state.SetLabel("|c| = " + std::to_string(c.size()));
}
BENCHMARK(BM_WhiteheadMinimize)->Arg(8)->Arg(16)->Arg(32);

void BM_IsPrimitive(benchmark::State& state) {
  const Word w = generate(FamilyId::L0, {0, state.range(0), 3});
  for (auto _ : state) benchmark::DoNotOptimize(is_primitive(w));
}
BENCHMARK(BM_IsPrimitive)->Arg(2)->Arg(6)->Arg(20);

void BM_Generate(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(FamilyId::D2, {n, 6, -6}));
  }
}
BENCHMARK(BM_Generate)->Arg(0)->Arg(6)->Arg(16);

void BM_Equiv(benchmark::State& state) {
  const Word a = generate(FamilyId::D2, {1, 4, 3});
  const Word b = commutator(Word{Letter::x()}, Word{Letter::y()});
  for (auto _ : state) benchmark::DoNotOptimize(equiv(a, b));
}
BENCHMARK(BM_Equiv);

void BM_Decide11(benchmark::State& state) {
  ClassifierOptions opts;
  opts.window = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decide_11(4, -3, opts));
}
BENCHMARK(BM_Decide11)->Arg(1)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify(3, 5));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

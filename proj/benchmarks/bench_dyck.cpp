#include <random>

#include <benchmark/benchmark.h>

#include "dyck/dyck.hpp"

namespace {

using namespace dyck;

Word random_member(std::mt19937& rng, int pairs, int couples) {
  std::vector<Letter> v;
  for (int c = 0; c < couples; ++c) {
    const int pair = static_cast<int>(rng() % static_cast<unsigned>(pairs));
    const Letter first =
        (rng() & 1u) != 0 ? closer_of_pair(pair) : opener_of_pair(pair);
    const std::size_t gap = rng() % (v.size() + 1);
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(gap),
             {first, involution(first)});
  }
  return Word(std::move(v));
}

void BM_TwoSidedRecognizer(benchmark::State& state) {
  std::mt19937 rng(1);
  const Word w = random_member(rng, 2, static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_two_sided_quick(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TwoSidedRecognizer)->Range(16, 4096);

void BM_KernelMember(benchmark::State& state) {
  std::mt19937 rng(1);
  const Word w = random_member(rng, 2, static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_member(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KernelMember)->Range(16, 4096);

void BM_Evaluate(benchmark::State& state) {
  PairedAlphabet a2(2);
  const auto q = random_quotient(a2, 5, 99);
  std::mt19937 rng(2);
  Word w;
  for (int i = 0; i < state.range(0); ++i)
    w.push_back(static_cast<Letter>(rng() % 4));
  for (auto _ : state) benchmark::DoNotOptimize(q.evaluate(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Evaluate)->Range(16, 4096);

void BM_Approximate(benchmark::State& state) {
  PairedAlphabet a2(2);
  const auto suite = standard_suite(a2);
  const auto& q = suite[2].quotient;  // cyclic-3
  const auto gadgets = build_gadgets(q);
  std::mt19937 rng(3);
  const Word w = random_member(rng, 2, static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(approximate(q, w, gadgets));
}
BENCHMARK(BM_Approximate)->Range(8, 512);

void BM_SeparateAndVerify(benchmark::State& state) {
  PairedAlphabet a2(2);
  std::mt19937 rng(4);
  Word w;
  for (int i = 0; i < state.range(0); ++i)
    w.push_back(static_cast<Letter>(rng() % 4));
  if (is_two_sided_quick(w)) w.push_back(0);
  for (auto _ : state) {
    const auto cert = separate(a2, w);
    benchmark::DoNotOptimize(verify_separation(cert, w, 6));
  }
}
BENCHMARK(BM_SeparateAndVerify)->Range(8, 128);

void BM_ExhaustiveEquivalence(benchmark::State& state) {
  PairedAlphabet a2(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        exhaustive_equivalence(a2, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExhaustiveEquivalence)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();

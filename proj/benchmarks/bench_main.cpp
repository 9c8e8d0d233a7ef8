#include <benchmark/benchmark.h>

#include <random>

#include "b3cert/burau.hpp"
#include "b3cert/free_group.hpp"
#include "b3cert/hyperbolic.hpp"
#include "b3cert/triangle_groups.hpp"

using namespace b3cert;

namespace {

FreeWord random_ab(unsigned seed, int len) {
  std::mt19937 rng(seed);
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) {
    const int g = 1 + static_cast<int>(rng() % 2);
    ls.push_back(rng() % 2 ? g : -g);
  }
  return FreeWord(2, ls);
}

void BM_CyclotomicMultiply(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const auto a = CyclotomicNumber::root(n, 1) + CyclotomicNumber(Rational(3, 7));
  const auto b = CyclotomicNumber::root(n, 3) - CyclotomicNumber(2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(8)->Arg(24)->Arg(60);

void BM_EvalWord(benchmark::State& state) {
  const BraidWord w = ab_to_braid(random_ab(1, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(eval_word_minus_q(w, 12));
}
BENCHMARK(BM_EvalWord)->Arg(10)->Arg(40)->Arg(160);

void BM_VerifyRelations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_VerifyRelations)->Arg(8)->Arg(23);

void BM_Membership(benchmark::State& state) {
  const ExactMatrix M = eval_word_minus_q(ab_to_braid(random_ab(2, static_cast<int>(state.range(0)))), 10);
  for (auto _ : state) benchmark::DoNotOptimize(member_delta_kkk(M, 5));
}
BENCHMARK(BM_Membership)->Arg(10)->Arg(40);

void BM_Closure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(finite_image_closure(static_cast<unsigned>(state.range(0)), 10000));
}
BENCHMARK(BM_Closure)->Arg(10)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_MagnusDepth(benchmark::State& state) {
  const FreeWord x1 = FreeWord::generator(3, 1), x2 = FreeWord::generator(3, 2);
  const FreeWord w = zeta_embed(commutator(commutator(x1, x2), x1));
  for (auto _ : state) benchmark::DoNotOptimize(magnus_depth(w, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MagnusDepth)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_H1Cert(benchmark::State& state) {
  const long D = state.range(0);
  const FreeWord a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(h1_cert(D, commutator(a.pow(2), b.pow(2))));
}
BENCHMARK(BM_H1Cert)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Tessellation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tessellation_svg(5, static_cast<unsigned>(state.range(0)), true));
}
BENCHMARK(BM_Tessellation)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

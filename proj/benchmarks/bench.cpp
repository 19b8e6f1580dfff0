#include <benchmark/benchmark.h>

#include "dilex/exp_dilator.hpp"
#include "dilex/extension.hpp"
#include "dilex/normal_f.hpp"
#include "dilex/ordinal.hpp"
#include "dilex/ordinal_expr.hpp"

namespace {

void BM_FEval(benchmark::State& state) {
  dilex::Ordinal a = dilex::parse_ordinal("w^(w^2*2+w)*3+w^w*2+w*5+7");
  for (auto _ : state) {
    benchmark::DoNotOptimize(dilex::f_eval(a));
  }
}
BENCHMARK(BM_FEval);

void BM_ExtCompare(benchmark::State& state) {
  dilex::Order X = dilex::make_ordinal_order(dilex::parse_ordinal("w^2"));
  dilex::Order ext = dilex::ext_order(dilex::F_build(), X);
  dilex::Term a = ext.at(40);
  dilex::Term b = ext.at(41);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ext.compare(a, b));
  }
}
BENCHMARK(BM_ExtCompare);

void BM_JEmbed(benchmark::State& state) {
  dilex::Order X = dilex::make_fin(5);
  auto G = dilex::xi_build();
  std::vector<dilex::Term> seq{dilex::Term::nat(4), dilex::Term::nat(2), dilex::Term::nat(1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dilex::J_embed(X, G, seq));
  }
}
BENCHMARK(BM_JEmbed);

}  // namespace

BENCHMARK_MAIN();

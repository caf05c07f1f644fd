#include <benchmark/benchmark.h>

#include <random>

#include <fstream>
#include <sstream>

#include "ceres/extract.hpp"
#include "ceres/oracle.hpp"
#include "ceres/parser.hpp"
#include "ceres/refute.hpp"

using namespace ceres;

namespace {

DefEnv loadChain() {
  std::ifstream in(std::string(CERES_CORPUS_DIR) + "/ch6.sch");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void BM_ParseChainFixture(benchmark::State& state) {
  std::ifstream in(std::string(CERES_CORPUS_DIR) + "/ch6.sch");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  for (auto _ : state) benchmark::DoNotOptimize(parse(text));
}
BENCHMARK(BM_ParseChainFixture);

void BM_ExtractChain(benchmark::State& state) {
  DefEnv env = loadChain();
  for (auto _ : state) {
    Evaluator ev(env);
    benchmark::DoNotOptimize(extractChar(ev, "psi", Config::allOff(env.proof("psi")->end)));
  }
}
BENCHMARK(BM_ExtractChain);

void BM_EvalCharacteristicRow(benchmark::State& state) {
  DefEnv env = loadChain();
  Evaluator ev(env);
  CharExtraction ex = extractChar(ev, "psi", Config::allOff(env.proof("psi")->end));
  DefEnv extended = withExtraction(env, ex);
  for (auto _ : state) {
    Evaluator ev2(extended);
    benchmark::DoNotOptimize(ev2.evalClauseSetOf(ex.term, state.range(0)));
  }
}
BENCHMARK(BM_EvalCharacteristicRow)->Arg(4)->Arg(16)->Arg(64);

void BM_EvalProofInstance(benchmark::State& state) {
  DefEnv env = loadChain();
  for (auto _ : state) {
    Evaluator ev(env);
    benchmark::DoNotOptimize(ev.evalProof("psi", state.range(0)));
  }
}
BENCHMARK(BM_EvalProofInstance)->Arg(4)->Arg(16);

void BM_RefutationInstance(benchmark::State& state) {
  DefEnv env = loadChain();
  Evaluator ev(env);
  CharExtraction ex = extractChar(ev, "psi", Config::allOff(env.proof("psi")->end));
  DefEnv extended = withExtraction(env, ex);
  Evaluator ev2(extended);
  RefutationSchema rs = buildRefutationSchema(ev2, ex.term, ex.groups);
  for (auto _ : state) {
    DeductionArena arena;
    const Deduction* d = evalRefutation(ev2, rs, state.range(0), arena);
    Clause end = checkDeduction(d, ev2.evalClauseSetOf(rs.theta, state.range(0)), true);
    benchmark::DoNotOptimize(end);
  }
}
BENCHMARK(BM_RefutationInstance)->Arg(4)->Arg(8);

void BM_TopClauseSet(benchmark::State& state) {
  std::vector<Atom> atoms;
  for (std::int64_t i = 0; i < state.range(0); ++i)
    atoms.push_back({"P", static_cast<std::uint64_t>(i)});
  for (auto _ : state) benchmark::DoNotOptimize(topClauseSet(atoms));
}
BENCHMARK(BM_TopClauseSet)->Arg(8)->Arg(12);

void BM_Dpll(benchmark::State& state) {
  std::mt19937 gen(7);
  std::vector<ClauseSet> sets;
  for (int i = 0; i < 50; ++i) {
    ClauseSet s;
    std::uniform_int_distribution<int> nc(3, 12), na(1, 5), idx(0, 5), side(0, 1);
    int k = nc(gen);
    for (int c = 0; c < k; ++c) {
      Clause cl;
      int m = na(gen);
      for (int a = 0; a < m; ++a) {
        Atom atom{side(gen) ? "P" : "Q", static_cast<std::uint64_t>(idx(gen))};
        (side(gen) ? cl.ante : cl.succ).push_back(atom);
      }
      s.insert(cl);
    }
    sets.push_back(std::move(s));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(satisfiableDpll(sets[i++ % sets.size()]));
  }
}
BENCHMARK(BM_Dpll);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "meetlogic/admissibility.hpp"
#include "meetlogic/meet.hpp"
#include "meetlogic/parser.hpp"
#include "meetlogic/search.hpp"

using namespace meet;

namespace {

const MeetSystem& cpl_ipl() {
  static const MeetSystem m = load_meet_system("CPL", "IPL");
  return m;
}

}  // namespace

static void BM_EvalProductMatrix(benchmark::State& state) {
  const auto& m = cpl_ipl();
  const auto products = m.product_matrices();
  Formula f = parse_formula("<->|->>(<and|and>(xi1, xi2), <or|or>(xi2, <neg|neg>(xi3)))", *m.cs);
  for (auto _ : state)
    for (const auto& p : products) benchmark::DoNotOptimize(holds(p, f));
}
BENCHMARK(BM_EvalProductMatrix);

static void BM_EmbedProject(benchmark::State& state) {
  const auto& m = cpl_ipl();
  Formula f = parse_formula("(xi1 -> neg xi2) and (xi3 or (xi1 iff xi2))", m.l1.sig);
  for (auto _ : state) benchmark::DoNotOptimize(project(embed(f, 1, *m.cs), 1));
}
BENCHMARK(BM_EmbedProject);

static void BM_ProofSearchCpl(benchmark::State& state) {
  LogicBundle cpl = load_preset("CPL");
  Formula goal = parse_formula("xi2 and xi1", cpl.sig);
  std::vector<Formula> hyps{parse_formula("xi1 and xi2", cpl.sig)};
  SearchBounds b;
  b.max_depth = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bounded_proof_search(cpl.calculus, {}, hyps, goal, b));
}
BENCHMARK(BM_ProofSearchCpl)->Arg(3)->Arg(4);

static void BM_DecideAdmissibleMeet(benchmark::State& state) {
  const auto& m = cpl_ipl();
  auto o1 = bundle_oracle(m.l1);
  auto o2 = bundle_oracle(m.l2);
  Rule r = parse_inline_rule("<or|or>(xi1, xi2) / xi1", *m.cs);
  for (auto _ : state) benchmark::DoNotOptimize(decide_admissible_meet(o1, o2, r.premises, r.conclusion, *m.cs));
}
BENCHMARK(BM_DecideAdmissibleMeet);

static void BM_Completion(benchmark::State& state) {
  LogicBundle ipl = load_preset("IPL");
  Formula psi = parse_formula("(xi1 -> neg xi2) iff (xi3 and (xi1 or xi4))", ipl.sig);
  for (auto _ : state) benchmark::DoNotOptimize(completion_formula(psi, Target::Bot, ipl.sig, ipl.completion));
}
BENCHMARK(BM_Completion);

static void BM_TreeEquivalence(benchmark::State& state) {
  LogicBundle ipl = load_preset("IPL");
  Formula a = parse_formula("(xi1 -> neg xi2) iff (xi3 and (xi1 or xi4))", ipl.sig);
  Formula b = parse_formula("((xi4 or xi1) and xi3) -> (neg xi2 iff xi1)", ipl.sig);
  for (auto _ : state) benchmark::DoNotOptimize(trees_equiv(a, b));
}
BENCHMARK(BM_TreeEquivalence);
BENCHMARK_MAIN();

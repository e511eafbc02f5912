// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance            run all criteria
//   acceptance 4 7        run the listed criteria only

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <unordered_map>

#include "../common/generators.hpp"
#include "meetlogic/admissibility.hpp"
#include "meetlogic/ipl_prover.hpp"
#include "meetlogic/meet.hpp"
#include "meetlogic/parser.hpp"
#include "meetlogic/templates.hpp"
#include "meetlogic_cli/cli.hpp"

using namespace meet;
using meet::testing::FormulaGen;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Constructor op(const Signature& s, const char* name) { return *s.find(name); }

Formula app(const Constructor& c, std::vector<Formula> args = {}) { return Formula::app(c, std::move(args)); }

// ---------------------------------------------------------------------------
// 1. Projection commutes with substitution.

Outcome projection_law() {
  MeetSystem m = load_meet_system("CPL", "CPL");
  FormulaGen gen(m.cs->combined(), 3, 101);
  std::size_t failures = 0;
  const std::size_t samples = 1000;
  for (std::size_t i = 0; i < samples; ++i) {
    Substitution rho;
    for (unsigned v = 1; v <= 3; ++v) rho.bind(v, gen.formula(3));
    Formula psi = gen.formula(6, 0.8);
    for (int k = 1; k <= 2; ++k)
      if (project(apply_substitution(rho, psi), k) != apply_substitution(project(rho, k), project(psi, k))) ++failures;
  }
  return {failures == 0, std::to_string(samples) + " (rho, psi) pairs, depth <= 6, " + std::to_string(failures) +
                             " failures"};
}

// ---------------------------------------------------------------------------
// 2. Product semantics is componentwise.

struct Node {
  int ctor = -1;  // index into the alphabet, -1 for xi1
  int a = -1, b = -1;
};

Outcome product_law() {
  LogicBundle l1 = load_preset("CPL", 1, "A"), l2 = load_preset("CPL", 1, "B");
  CombinedSignature cs(l1.sig, l2.sig);
  const Signature &s1 = l1.sig, &s2 = l2.sig;
  const std::vector<Constructor> alphabet{
      cs.pair(op(s1, "top"), op(s2, "bot")), cs.pair(op(s1, "bot"), op(s2, "top")),
      cs.pair(op(s1, "neg"), op(s2, "neg")), cs.pair(op(s1, "neg"), s2.verum_of_arity(1)),
      cs.pair(op(s1, "and"), op(s2, "or")),  cs.pair(op(s1, "->"), op(s2, "->")),
  };
  const std::vector<int> unary{2, 3}, binary{4, 5};

  // Formulas of depth <= 2 as nodes (the depth <= 1 layer is kept for
  // building); depth 3 is streamed over `level`.
  std::vector<Node> nodes{{-1, -1, -1}, {0, -1, -1}, {1, -1, -1}};
  std::vector<int> level{0, 1, 2};
  for (int round = 1; round <= 2; ++round) {
    std::vector<int> next{0, 1, 2};
    auto add = [&](Node nd) {
      next.push_back(static_cast<int>(nodes.size()));
      nodes.push_back(nd);
    };
    for (int u : unary)
      for (int f : level) add({u, f, -1});
    for (int c : binary)
      for (int f : level)
        for (int g : level) add({c, f, g});
    level = std::move(next);
  }
  std::vector<Formula> built;
  for (const auto& nd : nodes) {
    if (nd.ctor < 0) built.push_back(Formula::var(1));
    else if (nd.a < 0) built.push_back(app(alphabet[nd.ctor]));
    else if (nd.b < 0) built.push_back(app(alphabet[nd.ctor], {built[nd.a]}));
    else built.push_back(app(alphabet[nd.ctor], {built[nd.a], built[nd.b]}));
  }

  auto family = [](const Signature& s) {
    return std::vector<Matrix>{boolean_matrix(s), goedel_chain(s, 3), lukasiewicz3(s)};
  };
  const auto ms1 = family(s1), ms2 = family(s2);
  std::size_t checks = 0, failures = 0, eval_mismatch = 0, pairs = 0;
  for (const auto& m1 : ms1)
    for (const auto& m2 : ms2) {
      ++pairs;
      const Matrix p = product_matrix(m1, m2, cs);
      const unsigned n1 = m1.carrier(), n2 = m2.carrier(), np = p.carrier();
      struct Tables {
        const std::vector<unsigned>* p;
        const std::vector<unsigned>* c1;
        const std::vector<unsigned>* c2;
      };
      std::vector<Tables> ops;
      for (const auto& c : alphabet) ops.push_back({&p.table(c), &m1.table(c.part(1)), &m2.table(c.part(2))});

      std::vector<std::vector<unsigned>> tp(nodes.size()), t1(nodes.size()), t2(nodes.size());
      auto compose = [&](const Node& nd, const std::vector<unsigned>* ta[3], unsigned size, int which,
                         std::vector<unsigned>& out) {
        out.assign(size, 0);
        for (unsigned x = 0; x < size; ++x) {
          if (nd.ctor < 0) {
            out[x] = x;
            continue;
          }
          const auto& table = which == 0 ? *ops[nd.ctor].p : which == 1 ? *ops[nd.ctor].c1 : *ops[nd.ctor].c2;
          if (nd.a < 0) out[x] = table[0];
          else if (nd.b < 0) out[x] = table[(*ta[0])[x]];
          else out[x] = table[(*ta[0])[x] * size + (*ta[1])[x]];
        }
      };
      auto agree = [&](const std::vector<unsigned>& vp, const std::vector<unsigned>& v1,
                       const std::vector<unsigned>& v2) {
        for (unsigned a = 0; a < n1; ++a)
          for (unsigned b = 0; b < n2; ++b) {
            ++checks;
            if (vp[product_value(m2, a, b)] != product_value(m2, v1[a], v2[b])) ++failures;
          }
      };
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& nd = nodes[i];
        const std::vector<unsigned>* ap[3] = {nd.a >= 0 ? &tp[nd.a] : nullptr, nd.b >= 0 ? &tp[nd.b] : nullptr};
        const std::vector<unsigned>* a1[3] = {nd.a >= 0 ? &t1[nd.a] : nullptr, nd.b >= 0 ? &t1[nd.b] : nullptr};
        const std::vector<unsigned>* a2[3] = {nd.a >= 0 ? &t2[nd.a] : nullptr, nd.b >= 0 ? &t2[nd.b] : nullptr};
        compose(nd, ap, np, 0, tp[i]);
        compose(nd, a1, n1, 1, t1[i]);
        compose(nd, a2, n2, 2, t2[i]);
        agree(tp[i], t1[i], t2[i]);
        // The tables must match the library evaluator.
        for (unsigned x = 0; x < np; ++x)
          if (eval(p, {{1, x}}, built[i]) != tp[i][x]) ++eval_mismatch;
        for (unsigned a = 0; a < n1; ++a)
          if (eval(m1, {{1, a}}, project(built[i], 1)) != t1[i][a]) ++eval_mismatch;
        for (unsigned b = 0; b < n2; ++b)
          if (eval(m2, {{1, b}}, project(built[i], 2)) != t2[i][b]) ++eval_mismatch;
      }
      // Depth 3: every constructor over every pair of depth <= 2 formulas.
      std::vector<unsigned> vp(np), v1(n1), v2(n2);
      for (int u : unary)
        for (int f : level) {
          for (unsigned x = 0; x < np; ++x) vp[x] = (*ops[u].p)[tp[f][x]];
          for (unsigned a = 0; a < n1; ++a) v1[a] = (*ops[u].c1)[t1[f][a]];
          for (unsigned b = 0; b < n2; ++b) v2[b] = (*ops[u].c2)[t2[f][b]];
          agree(vp, v1, v2);
        }
      for (int c : binary)
        for (int f : level)
          for (int g : level) {
            for (unsigned x = 0; x < np; ++x) vp[x] = (*ops[c].p)[tp[f][x] * np + tp[g][x]];
            for (unsigned a = 0; a < n1; ++a) v1[a] = (*ops[c].c1)[t1[f][a] * n1 + t1[g][a]];
            for (unsigned b = 0; b < n2; ++b) v2[b] = (*ops[c].c2)[t2[f][b] * n2 + t2[g][b]];
            agree(vp, v1, v2);
          }
    }
  const std::size_t depth3 = 3 + 2 * level.size() + 2 * level.size() * level.size();
  return {failures == 0 && eval_mismatch == 0,
          std::to_string(depth3) + " formulas of depth <= 3 x " + std::to_string(pairs) + " matrix pairs, " +
              std::to_string(checks) + " checks, " + std::to_string(failures) + " failures, " +
              std::to_string(eval_mismatch) + " evaluator mismatches"};
}

// ---------------------------------------------------------------------------
// 3. The combined decision over stub oracles.

Outcome decision_table() {
  MeetSystem m = load_meet_system("CPL", "CPL");
  const auto& sig = m.cs->combined();
  Formula premise = parse_formula("<and|or>(xi1, xi2)", *m.cs);
  Formula beta = parse_formula("<or|and>(xi1, xi2)", *m.cs);
  std::size_t wrong = 0, over_budget = 0, cases = 0;
  for (int bits = 0; bits < 16; ++bits) {
    const bool a1 = bits & 1, a2 = bits & 2, f1 = bits & 4, f2 = bits & 8;
    int calls = 0;
    auto stub = [&](int k, bool answer, bool fallback) {
      AdmissibilityOracle o;
      o.tag = m.cs->component(k).tag();
      o.decide = [&calls, k, answer, fallback, &m](const std::vector<Formula>&, const Formula& goal) {
        ++calls;
        return OracleAnswer{goal == m.cs->component(k).bot() ? fallback : answer, true};
      };
      return o;
    };
    MeetDecision d = decide_admissible_meet(stub(1, a1, f1), stub(2, a2, f2), {premise}, beta, *m.cs);
    // Both admissible, both not, or the side that said 1 decides through its falsum.
    const bool expected = (a1 && a2) ? true : (!a1 && !a2) ? false : a1 ? f1 : f2;
    const int expected_calls = a1 == a2 ? 2 : 3;
    ++cases;
    if (d.admissible != expected || d.calls != expected_calls) ++wrong;
    if (calls > 3 || calls != d.calls) ++over_budget;
  }
  (void)sig;
  return {wrong == 0 && over_budget == 0, std::to_string(cases) + " stub settings (a1, a2, bot1, bot2), " +
                                              std::to_string(wrong) + " wrong verdicts, " +
                                              std::to_string(over_budget) + " call-count violations"};
}

// ---------------------------------------------------------------------------
// 4. Decider against product entailment on CPL x CPL.

struct RuleKey {
  std::vector<Formula> premises;
  Formula conclusion;
  bool operator==(const RuleKey& o) const { return premises == o.premises && conclusion == o.conclusion; }
};
struct RuleKeyHash {
  std::size_t operator()(const RuleKey& k) const {
    std::size_t h = k.conclusion.hash();
    for (const auto& p : k.premises) h = h * 1000003u ^ p.hash();
    return h;
  }
};

AdmissibilityOracle memoized(AdmissibilityOracle inner,
                             std::shared_ptr<std::unordered_map<RuleKey, OracleAnswer, RuleKeyHash>> memo) {
  AdmissibilityOracle o;
  o.tag = inner.tag;
  o.exact = inner.exact;
  o.decide = [inner, memo](const std::vector<Formula>& premises, const Formula& conclusion) {
    RuleKey key{premises, conclusion};
    if (auto it = memo->find(key); it != memo->end()) return it->second;
    OracleAnswer a = inner(premises, conclusion);
    memo->emplace(std::move(key), a);
    return a;
  };
  return o;
}

Outcome theorem1_corpus() {
  MeetSystem m = load_meet_system("CPL", "CPL");
  const auto& cs = *m.cs;
  const Signature &s1 = cs.s1(), &s2 = cs.s2();
  std::vector<Formula> f0{Formula::var(1)};
  for (const char* a : {"top", "bot"})
    for (const char* b : {"top", "bot"}) f0.push_back(app(cs.pair(op(s1, a), op(s2, b))));
  const Constructor negs = cs.pair(op(s1, "neg"), op(s2, "neg"));
  std::vector<Constructor> bins;
  for (const char* a : {"and", "or", "->"})
    for (const char* b : {"and", "or", "->"}) bins.push_back(cs.pair(op(s1, a), op(s2, b)));
  auto grow = [&](const std::vector<Formula>& below) {
    std::vector<Formula> out = f0;
    for (const auto& f : below) out.push_back(app(negs, {f}));
    for (const auto& c : bins)
      for (const auto& f : below)
        for (const auto& g : below) out.push_back(app(c, {f, g}));
    return out;
  };
  const std::vector<Formula> f1 = grow(f0);
  const std::vector<Formula> f2 = grow(f1);

  const Matrix product = product_matrix(boolean_matrix(s1), boolean_matrix(s2), cs);
  auto mask_of = [&](const Formula& f) {
    unsigned mask = 0;
    for (unsigned x = 0; x < product.carrier(); ++x)
      if (product.designated(eval(product, {{1, x}}, f))) mask |= 1u << x;
    return mask;
  };
  const unsigned all = (1u << product.carrier()) - 1;

  auto memo1 = std::make_shared<std::unordered_map<RuleKey, OracleAnswer, RuleKeyHash>>();
  auto memo2 = std::make_shared<std::unordered_map<RuleKey, OracleAnswer, RuleKeyHash>>();
  const AdmissibilityOracle o1 = memoized(bundle_oracle(m.l1), memo1), o2 = memoized(bundle_oracle(m.l2), memo2);

  std::size_t rules = 0, disagreements = 0, admissible = 0, fallbacks = 0, inexact = 0;
  auto judge = [&](const std::vector<Formula>& premises, unsigned premise_mask, const Formula& beta,
                   unsigned beta_mask) {
    ++rules;
    MeetDecision d = decide_admissible_meet(o1, o2, premises, beta, cs);
    const bool semantic = (premise_mask & ~beta_mask & all) == 0;
    if (d.admissible != semantic) ++disagreements;
    if (d.admissible) ++admissible;
    if (d.fallback) ++fallbacks;
    if (!d.exact) ++inexact;
  };

  // Part A: every rule with at most two premises over the depth <= 1 formulas.
  std::vector<unsigned> m1;
  for (const auto& f : f1) m1.push_back(mask_of(f));
  const std::size_t n = f1.size();
  for (std::size_t c = 0; c < n; ++c) {
    judge({}, all, f1[c], m1[c]);
    for (std::size_t i = 0; i < n; ++i) {
      judge({f1[i]}, m1[i], f1[c], m1[c]);
      for (std::size_t j = i; j < n; ++j) judge({f1[i], f1[j]}, m1[i] & m1[j], f1[c], m1[c]);
    }
  }
  const std::size_t part_a = rules;

  // Part B: every depth <= 2 formula as axiom, as premise of xi1 and of bot,
  // and as conclusion from xi1.
  const Formula xi = Formula::var(1), falsum = cs.combined().bot();
  const unsigned xi_mask = mask_of(xi), falsum_mask = mask_of(falsum);
  for (const auto& f : f2) {
    const unsigned mf = mask_of(f);
    judge({}, all, f, mf);
    judge({f}, mf, xi, xi_mask);
    judge({f}, mf, falsum, falsum_mask);
    judge({xi}, xi_mask, f, mf);
  }
  std::ostringstream detail;
  detail << rules << " rules (" << part_a << " with <= 2 premises over " << n << " depth <= 1 formulas, "
         << rules - part_a << " from " << f2.size() << " depth <= 2 formulas), " << disagreements
         << " disagreements with product entailment, " << admissible << " admissible, " << fallbacks
         << " decided through a falsum call, " << inexact << " inexact";
  return {disagreements == 0 && inexact == 0, detail.str()};
}

// ---------------------------------------------------------------------------
// 5. Derivation templates.

struct TemplateStats {
  std::size_t built = 0, accepted = 0, mutants = 0, mutants_rejected_at_line = 0, search_misses = 0;
};

Formula wrap_negneg(const CombinedSignature& cs, const Formula& f) {
  return app(cs.pair(op(cs.s1(), "neg"), op(cs.s2(), "neg")), {f});
}

void audit(const Derivation& d, const Calculus& calc, const std::vector<Rule>& extra,
           const std::vector<Formula>& hyps, const CombinedSignature& cs, TemplateStats& st) {
  ++st.built;
  if (check_derivation(d, calc, extra, hyps).accepted) ++st.accepted;
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    Derivation bad = d;
    bad.lines[i].formula = wrap_negneg(cs, bad.lines[i].formula);
    ++st.mutants;
    Verdict v = check_derivation(bad, calc, extra, hyps);
    if (!v.accepted && v.line == i + 1) ++st.mutants_rejected_at_line;
  }
}

Outcome templates() {
  MeetSystem m = load_meet_system("CPL", "CPL");
  const auto& cs = *m.cs;
  std::vector<Constructor> symmetric;
  for (const char* a : {"top", "bot", "neg", "and", "or", "->"}) symmetric.push_back(cs.pair(op(cs.s1(), a), op(cs.s2(), a)));
  FormulaGen gen(cs.combined(), 3, 505);
  FormulaGen sym(symmetric, 3, 506);
  auto pair = [&](const char* name) { return cs.pair(op(cs.s1(), name), op(cs.s2(), name)); };
  const Constructor conj = pair("and"), disj = pair("or"), imp = pair("->");

  SearchBounds bounds;
  bounds.liftable = true;
  bounds.max_depth = 4;
  auto prove = [&](int k, const std::vector<Formula>& premises, const Formula& goal, bool basis_mode)
      -> std::optional<ComponentProof> {
    const auto& l = m.logic(k);
    std::vector<Rule> extra = basis_mode ? l.basis : std::vector<Rule>{};
    std::vector<Formula> proj;
    for (const auto& p : premises) proj.push_back(project(p, k));
    auto d = bounded_proof_search(l.calculus, extra, proj, goal, bounds);
    if (!d) return std::nullopt;
    return ComponentProof{*d, &l.calculus, extra};
  };

  TemplateStats figs[4];
  const std::size_t per_template = 50;
  for (int fig = 0; fig < 4; ++fig) {
    const bool basis_mode = fig == 0 || fig == 1;
    const bool vacuous = fig == 1 || fig == 3;
    std::size_t attempts = 0;
    while (figs[fig].built < per_template && attempts++ < 20 * per_template) {
      Formula a = sym.compound(2), b = gen.compound(2);
      std::vector<Formula> premises;
      Formula beta = b;
      if (!vacuous) {
        switch (gen.below(5)) {
          case 0: premises = {a, app(imp, {a, b})}; beta = b; break;
          case 1: premises = {app(conj, {a, b})}; beta = a; break;
          case 2: premises = {app(conj, {b, a})}; beta = a; break;
          case 3: premises = {a}; beta = app(disj, {a, b}); break;
          default: premises = {a, b}; beta = app(conj, {a, b}); break;
        }
        auto d1 = prove(1, premises, project(beta, 1), basis_mode);
        auto d2 = prove(2, premises, project(beta, 2), basis_mode);
        if (!d1 || !d2) {
          ++figs[fig].search_misses;
          continue;
        }
        Derivation d = build_both_admissible_derivation(premises, beta, *d1, *d2, cs);
        auto extra = lifted_extra_rules(*d1, 1, cs);
        auto more = lifted_extra_rules(*d2, 2, cs);
        extra.insert(extra.end(), more.begin(), more.end());
        audit(d, m.calculus, extra, premises, cs, figs[fig]);
      } else {
        const int j = 1 + static_cast<int>(gen.below(2)), k = 3 - j;
        const Formula falsum_j = app(j == 1 ? cs.pair(op(cs.s1(), "bot"), op(cs.s2(), "top"))
                                            : cs.pair(op(cs.s1(), "top"), op(cs.s2(), "bot")));
        switch (gen.below(3)) {
          case 0: premises = {app(conj, {falsum_j, a})}; break;
          case 1: premises = {a, app(imp, {a, falsum_j})}; break;
          default: premises = {falsum_j}; break;
        }
        auto df = prove(j, premises, cs.component(j).bot(), basis_mode);
        if (!df) {
          ++figs[fig].search_misses;
          continue;
        }
        auto ej = ex_falso_continuation(m.logic(j).calculus, cs.component(j), project(beta, j));
        auto ek = ex_falso_continuation(m.logic(k).calculus, cs.component(k), project(beta, k));
        Derivation d = build_vacuous_side_derivation(premises, beta, j, *df, ej, ek, cs);
        audit(d, m.calculus, lifted_extra_rules(*df, j, cs), premises, cs, figs[fig]);
      }
    }
  }
  bool pass = true;
  std::ostringstream detail;
  const char* names[4] = {"both/basis", "vacuous/basis", "both/plain", "vacuous/plain"};
  for (int fig = 0; fig < 4; ++fig) {
    const auto& st = figs[fig];
    pass = pass && st.built == per_template && st.accepted == st.built && st.mutants_rejected_at_line == st.mutants;
    detail << (fig ? "; " : "") << names[fig] << ": " << st.accepted << "/" << st.built << " accepted, "
           << st.mutants_rejected_at_line << "/" << st.mutants << " mutants rejected at the corrupted line";
  }
  return {pass, detail.str()};
}

// ---------------------------------------------------------------------------
// 6. Tagging arithmetic and soundness.

Outcome tagging() {
  MeetSystem m = load_meet_system("CPL", "CPL");
  const auto& cs = *m.cs;
  const Constructor imp1 = cs.embed_constructor(op(cs.s1(), "->"), 1);
  const Rule mp = make_rule("MP", {Formula::var(1), app(imp1, {Formula::var(1), Formula::var(2)})}, Formula::var(2));
  const auto everything = cs.combined().all();
  const auto tagged = tag_rule(mp, everything);
  std::size_t shape_errors = 0;
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    const Constructor& c = everything[i];
    std::vector<Formula> args;
    for (unsigned v = 3; v < 3 + c.arity(); ++v) args.push_back(Formula::var(v));
    const Formula concl = app(c, args);
    const Rule expected = make_rule("", {Formula::var(1), app(imp1, {Formula::var(1), concl})}, concl);
    if (!(tagged[i].rule == expected) || tagged[i].rule.name != "MP[" + c.spelling() + "]") ++shape_errors;
  }
  const std::vector<Matrix> booleans{product_matrix(boolean_matrix(cs.s1()), boolean_matrix(cs.s2()), cs)};
  const bool untagged_unsound = !check_rule_soundness(booleans, mp);
  std::size_t assembled_unsound = 0, full_unsound = 0;
  const auto assembled = tag_rule(mp, cs.embedded(1), 1);
  for (const auto& t : assembled)
    if (!check_rule_soundness(booleans, t.rule)) ++assembled_unsound;
  for (const auto& t : tagged)
    if (!check_rule_soundness(booleans, t.rule)) ++full_unsound;
  std::ostringstream detail;
  detail << "C = " << everything.size() << ", tagged rules = " << tagged.size() << ", shape errors " << shape_errors
         << ", untagged MP " << (untagged_unsound ? "unsound" : "sound") << " on B2 x B2, " << assembled.size()
         << " inherited variants with " << assembled_unsound << " unsound (" << full_unsound << "/"
         << tagged.size() << " over the whole combined signature are unsound)";
  return {tagged.size() == everything.size() && shape_errors == 0 && untagged_unsound && assembled_unsound == 0,
          detail.str()};
}

// ---------------------------------------------------------------------------
// 7. Completion formulas.

Outcome completion() {
  LogicBundle ipl = load_preset("IPL");
  const auto& sig = ipl.sig;
  const Constructor iff = op(sig, "iff");
  FormulaGen gen(sig, 3, 707);
  std::size_t shape_fail = 0, theorem_fail = 0, runs = 0;
  for (int i = 0; i < 200; ++i) {
    Formula psi = gen.formula(5, 0.8);
    for (Target t : {Target::Top, Target::Bot}) {
      ++runs;
      Formula delta = completion_formula(psi, t, sig, ipl.completion);
      if (!trees_equiv(delta, psi)) ++shape_fail;
      if (!ipl_theorem(app(iff, {t == Target::Top ? sig.top() : sig.bot(), delta}))) ++theorem_fail;
    }
  }
  Formula psi = parse_formula("xi1 -> neg xi2", sig);
  Formula delta = completion_formula(psi, Target::Top, sig, ipl.completion, "or");
  const bool worked = delta == parse_formula("top or neg bot", sig) && trees_equiv(delta, psi) &&
                      ipl_theorem(app(iff, {sig.top(), delta}));
  return {shape_fail == 0 && theorem_fail == 0 && worked,
          std::to_string(runs) + " completions of depth <= 5 formulas, " + std::to_string(shape_fail) +
              " shape failures, " + std::to_string(theorem_fail) + " equivalence failures; p1 -> neg p2 gives " +
              print_formula(delta) + (worked ? " (matches)" : " (MISMATCH)")};
}

// ---------------------------------------------------------------------------
// 8. Equalizing pairs of formulas.

Outcome equalize() {
  LogicBundle a = load_preset("CPL", 3, "CPL1"), b = load_preset("CPL", 3, "CPL2");
  const IdentityProfile *p1 = a.identity("and"), *p2 = b.identity("->");
  FormulaGen g1(a.sig, 3, 801), g2(b.sig, 3, 802);
  const Matrix m1 = boolean_matrix(a.sig), m2 = boolean_matrix(b.sig);
  std::size_t tree_fail = 0, eq_fail = 0;
  for (int i = 0; i < 100; ++i) {
    Formula f1 = g1.formula(4), f2 = g2.formula(4);
    auto out = equalize_pair(f1, a.sig, *p1, a.completion, f2, b.sig, *p2, b.completion);
    if (!trees_equiv(out.first, out.second)) ++tree_fail;
    if (!holds(m1, app(op(a.sig, "iff"), {f1, out.first})) || !holds(m2, app(op(b.sig, "iff"), {f2, out.second})))
      ++eq_fail;
  }
  return {tree_fail == 0 && eq_fail == 0, "100 pairs, " + std::to_string(tree_fail) + " tree failures, " +
                                              std::to_string(eq_fail) + " equivalence failures"};
}

// ---------------------------------------------------------------------------
// 9. Combined basis from the command line.

Outcome combined_basis_listing() {
  std::ostringstream out, err;
  int code = cli::run({"basis", "--l1", "IPL", "--l2", "S43", "--basis-n", "3", "--format", "structured"}, out, err);
  if (code != 0) return {false, "basis verb exited " + std::to_string(code) + ": " + err.str()};
  auto j = nlohmann::json::parse(out.str());
  MeetSystem m = load_meet_system("IPL", "S43");
  PrintOptions po;
  po.abbreviate = m.cs.get();
  std::vector<std::string> expected;
  for (const auto& r : visser_rules(m.l1.sig, 3)) expected.push_back(print_rule(embed(r, 1, *m.cs), po));
  expected.push_back(print_rule(embed(m.l2.basis.at(0), 2, *m.cs), po));
  bool ok = j["count"] == 4 && j["rules"].size() == 4;
  std::size_t mismatches = 0;
  for (std::size_t i = 0; ok && i < 4; ++i) {
    const auto& r = j["rules"][i];
    if (r["rule"] != expected[i] || r["liberal"] != false || r["tagged"] != false || r["side"] != (i < 3 ? 1 : 2))
      ++mismatches;
  }
  ok = ok && mismatches == 0 && j["rules"][3]["name"] == "2:R1";
  return {ok, "count " + j["count"].dump() + " (3 Visser + 1 S4.3), " + std::to_string(mismatches) +
                  " structural mismatches, S4.3 rule " + j["rules"][3]["name"].get<std::string>() + " untagged"};
}

// ---------------------------------------------------------------------------
// 10. Consistency.

Outcome consistency() {
  std::ostringstream detail;
  bool pass = true;
  for (auto [a, b] : {std::pair{"CPL", "CPL"}, std::pair{"IPL", "S43"}}) {
    MeetSystem m = load_meet_system(a, b);
    SearchBounds bounds;
    bounds.max_depth = 6;
    bounds.max_nodes = 100000;
    // Widen the premise pool beyond the goal's own subformulas.
    FormulaGen gen(m.cs->combined(), 2, 1010);
    for (int i = 0; i < 16; ++i) bounds.hints.push_back(gen.formula(2));
    std::size_t derived = 0, nodes = 0, exhausted = 0;
    for (const Formula& goal : {m.cs->falsum_of(1), m.cs->falsum_of(2), m.cs->combined().bot(), Formula::var(1)}) {
      SearchStats st;
      if (bounded_proof_search(m.calculus, {}, {}, goal, bounds, &st)) ++derived;
      nodes += st.nodes;
      if (st.exhausted_budget) ++exhausted;
    }
    std::size_t holding = 0;
    const auto products = m.product_matrices(1024);
    for (const auto& p : products)
      for (int k = 1; k <= 2; ++k)
        if (holds(p, m.cs->falsum_of(k))) ++holding;
    pass = pass && derived == 0 && holding == 0;
    detail << (detail.tellp() ? "; " : "") << m.calculus.name() << ": " << derived << " of 4 goals derived (" << nodes
           << " nodes, " << exhausted << " searches hit the node budget), falsum holds in " << holding << " of " << products.size() << " products";
  }
  return {pass, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"projection commutes with substitution", projection_law},
      {"product semantics is componentwise", product_law},
      {"combined decision case table", decision_table},
      {"decider agrees with product entailment on CPL x CPL", theorem1_corpus},
      {"derivation templates check and mutants fail", templates},
      {"tagging arithmetic and soundness", tagging},
      {"completion formulas", completion},
      {"equalized pairs", equalize},
      {"combined basis for IPL x S4.3", combined_basis_listing},
      {"consistency of the combined calculi", consistency},
  };
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoul(argv[i]));
  if (selected.empty())
    for (std::size_t i = 1; i <= criteria.size(); ++i) selected.push_back(i);

  int failures = 0;
  for (std::size_t n : selected) {
    if (n == 0 || n > criteria.size()) {
      std::cerr << "no criterion " << n << "\n";
      return 2;
    }
    const auto& [name, fn] = criteria[n - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << name << "): " << o.detail << " ["
              << timing << "]" << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

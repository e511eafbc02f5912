#include "meetlogic/admissibility.hpp"

#include "meetlogic/parser.hpp"

namespace meet {

OracleAnswer AdmissibilityOracle::operator()(const std::vector<Formula>& premises, const Formula& conclusion) const {
  if (!decide) throw Error("oracle " + tag + " has no decision procedure");
  return decide(premises, conclusion);
}

AdmissibilityOracle table_oracle(std::string_view text, const Signature& sig, std::string tag) {
  struct Entry {
    Rule rule;
    bool admissible;
  };
  auto entries = std::make_shared<std::vector<Entry>>();
  std::size_t line_no = 0;
  for (const auto& line : split_trim(text, '\n')) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (line[0] != '0' && line[0] != '1')
      throw Error("oracle table line " + std::to_string(line_no) + " must start with 0 or 1");
    entries->push_back({parse_inline_rule(line.substr(1), sig), line[0] == '1'});
  }
  AdmissibilityOracle o;
  o.tag = tag;
  o.decide = [entries, tag, sig](const std::vector<Formula>& premises, const Formula& conclusion) {
    for (const auto& e : *entries)
      if (e.rule.premises == premises && e.rule.conclusion == conclusion) return OracleAnswer{e.admissible, true};
    throw Error("oracle " + tag + " has no entry for " + print_rule(make_rule("", premises, conclusion)));
  };
  return o;
}

std::string to_string(Admissibility v) {
  switch (v) {
    case Admissibility::Admissible: return "admissible";
    case Admissibility::NotAdmissible: return "not-admissible";
    case Admissibility::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::vector<Formula> candidate_images(const Signature& sig, std::size_t size) {
  std::vector<Formula> pool{sig.bot(), sig.top()};
  auto neg = sig.find("neg");
  for (unsigned i = 1; pool.size() < size; ++i) {
    pool.push_back(Formula::var(i));
    if (neg && pool.size() < size) pool.push_back(Formula::app(*neg, {Formula::var(i)}));
  }
  pool.resize(std::min(pool.size(), size));
  return pool;
}

/// Theoremhood good enough to certify a refutation: exact when the bundle is,
/// otherwise the matrices filter and a short proof search confirms.
bool certified_theorem(const LogicBundle& logic, const Formula& f) {
  if (!logic.theorem(f)) return false;
  if (logic.theorem_exact()) return true;
  SearchBounds b;
  b.max_depth = 3;
  b.max_nodes = 20000;
  return bounded_proof_search(logic.calculus, {}, {}, f, b).has_value();
}

std::optional<Substitution> find_refutation(const LogicBundle& logic, const std::vector<Formula>& premises,
                                            const Formula& beta, const BruteForceBounds& bounds) {
  std::set<unsigned> vars;
  for (const auto& p : premises) collect_variables(p, vars);
  collect_variables(beta, vars);
  const std::vector<unsigned> order(vars.begin(), vars.end());
  const auto pool = candidate_images(logic.sig, bounds.pool);
  std::vector<std::size_t> pick(order.size(), 0);
  for (std::size_t tried = 0; tried < bounds.max_substitutions; ++tried) {
    Substitution s;
    for (std::size_t i = 0; i < order.size(); ++i) s.bind(order[i], pool[pick[i]]);
    Formula image = apply_substitution(s, beta);
    if (!logic.theorem(image)) {
      bool premises_hold = true;
      for (const auto& p : premises)
        if (!certified_theorem(logic, apply_substitution(s, p))) {
          premises_hold = false;
          break;
        }
      if (premises_hold) return s;
    }
    // Odometer with the first variable most significant.
    std::size_t i = order.size();
    while (i > 0 && ++pick[i - 1] == pool.size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return std::nullopt;
}

}  // namespace

BruteForceResult brute_force_admissible(const LogicBundle& logic, const std::vector<Formula>& premises,
                                        const Formula& beta, const BruteForceBounds& bounds) {
  if (logic.matrices.empty() && logic.verification == Verification::Matrices)
    throw Error("logic " + logic.name + " has no matrices for brute-force admissibility");
  BruteForceResult r;
  const bool exact = logic.structurally_complete && logic.characteristic;
  if (exact && entails(logic.matrices, premises, beta)) {
    r.verdict = Admissibility::Admissible;
    r.exact = true;
    return r;
  }
  r.witness = find_refutation(logic, premises, beta, bounds);
  if (r.witness || exact) {
    r.verdict = Admissibility::NotAdmissible;
    r.exact = true;
  }
  return r;
}

AdmissibilityOracle bundle_oracle(const LogicBundle& logic, const BruteForceBounds& bounds) {
  AdmissibilityOracle o;
  o.tag = logic.sig.tag();
  o.exact = logic.structurally_complete && logic.characteristic;
  o.decide = [&logic, bounds](const std::vector<Formula>& premises, const Formula& conclusion) {
    for (const auto* set : {&logic.admissible_fixtures, &logic.nonadmissible_fixtures})
      for (const auto& f : *set)
        if (f.premises == premises && f.conclusion == conclusion)
          return OracleAnswer{set == &logic.admissible_fixtures, true};
    auto r = brute_force_admissible(logic, premises, conclusion, bounds);
    return OracleAnswer{r.verdict != Admissibility::NotAdmissible, r.exact};
  };
  return o;
}

std::string MeetDecision::report() const {
  std::string out = "a1=" + std::to_string(a1) + " a2=" + std::to_string(a2);
  if (fallback) out += std::string(a1 ? " bot1=" : " bot2=") + (*fallback ? "1" : "0");
  out += std::string(" → ") + (admissible ? "1" : "0");
  if (!exact) out += " (bounded)";
  return out;
}

MeetDecision decide_admissible_meet(const AdmissibilityOracle& o1, const AdmissibilityOracle& o2,
                                    const std::vector<Formula>& premises, const Formula& beta,
                                    const CombinedSignature& cs) {
  std::vector<Formula> proj[2];
  for (const auto& p : premises) {
    cs.combined().require_well_formed(p);
    proj[0].push_back(project(p, 1));
    proj[1].push_back(project(p, 2));
  }
  cs.combined().require_well_formed(beta);
  MeetDecision d;
  auto ask = [&](const AdmissibilityOracle& o, int k, const Formula& goal) {
    ++d.calls;
    OracleAnswer a = o(proj[k - 1], goal);
    d.exact = d.exact && a.exact;
    return a.admissible;
  };
  d.a1 = ask(o1, 1, project(beta, 1));
  d.a2 = ask(o2, 2, project(beta, 2));
  if (d.a1 == d.a2) {
    d.admissible = d.a1;
    return d;
  }
  if (d.a1) d.fallback = ask(o1, 1, cs.s1().bot());
  else d.fallback = ask(o2, 2, cs.s2().bot());
  d.admissible = *d.fallback;
  return d;
}

std::optional<Derivation> derivable_with_basis(const std::vector<Formula>& premises, const Formula& goal,
                                               const std::vector<Rule>& basis, const Calculus& calc,
                                               const SearchBounds& bounds) {
  return bounded_proof_search(calc, basis, premises, goal, bounds);
}

TaggedRuleSet combined_basis(const std::vector<Rule>& b1, const std::vector<Rule>& b2, const CombinedSignature& cs) {
  TaggedRuleSet out = inherit_rules(b1, 1, cs);
  for (auto& t : inherit_rules(b2, 2, cs)) out.push_back(std::move(t));
  return out;
}

StructuralSampleReport check_structural_completeness_sample(const LogicBundle& logic,
                                                            const AdmissibilityOracle& oracle,
                                                            const std::vector<Rule>& rules,
                                                            const SearchBounds& bounds) {
  StructuralSampleReport report;
  for (const auto& r : rules) {
    StructuralSampleEntry e{r, oracle(r.premises, r.conclusion), false, false};
    e.derivable = derivable_with_basis(r.premises, r.conclusion, {}, logic.calculus, bounds).has_value();
    e.candidate = e.oracle.admissible && !e.derivable;
    if (e.oracle.admissible == e.derivable) ++report.agreements;
    if (e.candidate) ++report.candidates;
    if (!e.oracle.admissible && e.derivable) ++report.contradictions;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace meet

#include "meetlogic/templates.hpp"

#include <unordered_map>

namespace meet {

namespace {

using LineMap = std::unordered_map<Formula, std::size_t, FormulaHash>;

const Rule* component_rule(const ComponentProof& p, const std::string& name) {
  if (p.calculus)
    if (const Rule* r = p.calculus->find(name)) return r;
  for (const auto& r : p.extra)
    if (r.name == name) return &r;
  return nullptr;
}

/// Appends the lifted lines of `proof` to `out`; component hypotheses are
/// resolved through `available` (component formula -> line in `out`).
std::size_t splice(Derivation& out, const ComponentProof& proof, int k, const Formula& expected,
                   const LineMap& available, const CombinedSignature& cs) {
  const auto& lines = proof.derivation.lines;
  if (lines.empty()) {
    auto it = available.find(expected);
    if (it == available.end()) throw Error("empty sub-derivation but " + print_formula(expected) + " is not available");
    return it->second;
  }
  std::vector<std::size_t> local(lines.size() + 1, 0);
  for (std::size_t t = 1; t <= lines.size(); ++t) {
    const auto& line = lines[t - 1];
    const auto& why = line.why;
    std::vector<std::size_t> cited;
    for (std::size_t c : why.cited) {
      if (c == 0 || c >= t) throw Error("sub-derivation cites a later line");
      cited.push_back(local[c]);
    }
    switch (why.kind) {
      case Step::Hyp: {
        auto it = available.find(line.formula);
        if (it == available.end())
          throw Error("sub-derivation hypothesis " + print_formula(line.formula) + " is not a projected premise");
        local[t] = it->second;
        break;
      }
      case Step::RuleApp: {
        const Rule* r = component_rule(proof, why.rule);
        if (!r) throw Error("sub-derivation cites unknown rule " + why.rule);
        Substitution witness = embed(why.witness, k, cs);
        std::string name = inherited_rule_name(r->name, k);
        if (r->liberal()) {
          if (line.formula.is_var())
            throw Error("line " + std::to_string(t) + " concludes a schema variable by liberal rule " + r->name +
                        "; it has no tagged counterpart");
          Constructor c = cs.embed_constructor(line.formula.head(), k);
          name = tagged_rule_name(name, c);
          const unsigned j = max_schema_index(*r);
          Substitution tagged;
          for (const auto& [v, img] : witness)
            if (v != r->conclusion.var_index()) tagged.bind(v, img);
          for (std::size_t i = 0; i < line.formula.args().size(); ++i)
            tagged.bind(j + static_cast<unsigned>(i) + 1, embed(line.formula.arg(i), k, cs));
          witness = std::move(tagged);
        }
        local[t] = out.apply(embed(line.formula, k, cs), std::move(name), std::move(cited), std::move(witness));
        break;
      }
      default:
        throw Error("component sub-derivations may only use HYP and rule applications");
    }
  }
  if (lines.back().formula != expected)
    throw Error("sub-derivation ends in " + print_formula(lines.back().formula) + " instead of " +
                print_formula(expected));
  return local[lines.size()];
}

LineMap colift_premises(Derivation& out, const std::vector<std::size_t>& hyp_lines,
                        const std::vector<Formula>& premises, int k, const CombinedSignature& cs) {
  LineMap available;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    Formula proj = project(premises[i], k);
    std::size_t line = out.colift(embed(proj, k, cs), hyp_lines[i], k);
    available.try_emplace(proj, line);
  }
  return available;
}

void require_liftable_goal(const Formula& beta) {
  if (beta.is_var()) throw Error("the conclusion is a schema variable; LFT cannot produce it");
}

}  // namespace

Derivation build_both_admissible_derivation(const std::vector<Formula>& premises, const Formula& beta,
                                            const ComponentProof& d1, const ComponentProof& d2,
                                            const CombinedSignature& cs) {
  require_liftable_goal(beta);
  Derivation out;
  std::vector<std::size_t> hyp_lines;
  for (const auto& a : premises) hyp_lines.push_back(out.hyp(a));
  const ComponentProof* proofs[2] = {&d1, &d2};
  std::size_t ends[2] = {0, 0};
  for (int k = 1; k <= 2; ++k) {
    LineMap available = colift_premises(out, hyp_lines, premises, k, cs);
    ends[k - 1] = splice(out, *proofs[k - 1], k, project(beta, k), available, cs);
  }
  out.lift(beta, ends[0], ends[1]);
  return out;
}

Derivation build_vacuous_side_derivation(const std::vector<Formula>& premises, const Formula& beta, int j,
                                         const ComponentProof& dfalsum, const ComponentProof& exfalso_j,
                                         const ComponentProof& exfalso_k, const CombinedSignature& cs) {
  if (j != 1 && j != 2) throw Error("vacuous side must be 1 or 2");
  require_liftable_goal(beta);
  const int k = 3 - j;
  Derivation out;
  std::vector<std::size_t> hyp_lines;
  for (const auto& a : premises) hyp_lines.push_back(out.hyp(a));
  LineMap available = colift_premises(out, hyp_lines, premises, j, cs);
  const Formula bot_j = cs.component(j).bot();
  std::size_t falsum_line = splice(out, dfalsum, j, bot_j, available, cs);
  std::size_t end_j = splice(out, exfalso_j, j, project(beta, j), LineMap{{bot_j, falsum_line}}, cs);
  std::size_t fx_line = out.falsum(cs.falsum_of(k), falsum_line);
  std::size_t end_k = splice(out, exfalso_k, k, project(beta, k), LineMap{{cs.component(k).bot(), fx_line}}, cs);
  if (j == 1) out.lift(beta, end_j, end_k);
  else out.lift(beta, end_k, end_j);
  return out;
}

ComponentProof ex_falso_continuation(const Calculus& calc, const Signature& sig, const Formula& target) {
  ComponentProof p;
  p.calculus = &calc;
  Formula bot = sig.bot();
  std::size_t h = p.derivation.hyp(bot);
  if (target == bot) return p;
  for (const auto& r : calc.rules()) {
    if (r.premises.size() == 1 && r.premises[0] == bot && r.liberal()) {
      p.derivation.apply(target, r.name, {h}, Substitution{{r.conclusion.var_index(), target}});
      return p;
    }
  }
  throw Error("calculus " + calc.name() + " has no ex falso rule bot / xi");
}

std::vector<Rule> lifted_extra_rules(const ComponentProof& proof, int k, const CombinedSignature& cs) {
  std::vector<Rule> embedded;
  for (const auto& r : proof.extra) {
    Rule e = embed(r, k, cs);
    e.name = inherited_rule_name(r.name, k);
    embedded.push_back(std::move(e));
  }
  return rules_of(tag_ruleset(embedded, cs.embedded(k), k));
}

}  // namespace meet

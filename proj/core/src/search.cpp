#include "meetlogic/search.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace meet {

namespace {

struct RuleInfo {
  const Rule* rule;
  std::vector<unsigned> unbound;
};

struct Proof {
  Step kind = Step::Hyp;
  const Rule* rule = nullptr;
  Substitution witness;
  std::vector<Formula> premises;
  int component = 0;
};

class Searcher {
 public:
  Searcher(const Calculus& calc, const std::vector<Rule>& extra, const std::vector<Formula>& hyps, const Formula& goal,
           const SearchBounds& bounds)
      : calc_(calc), bounds_(bounds), hyps_(hyps) {
    for (const auto& h : hyps) hypset_.insert(h);
    auto add_rule = [&](const Rule& r) {
      std::set<unsigned> fixed = variables(r.conclusion), all;
      for (const auto& p : r.premises) collect_variables(p, all);
      RuleInfo info{&r, {}};
      for (unsigned v : all)
        if (!fixed.count(v)) info.unbound.push_back(v);
      rules_.push_back(std::move(info));
    };
    for (const auto& r : calc.rules()) add_rule(r);
    for (const auto& r : extra) add_rule(r);
    std::stable_sort(rules_.begin(), rules_.end(), [](const RuleInfo& a, const RuleInfo& b) {
      auto key = [](const RuleInfo& i) { return std::make_pair(i.rule->premises.size() > 0, i.unbound.size()); };
      return key(a) < key(b);
    });
    build_pool(goal);
  }

  std::optional<Derivation> run(const Formula& goal, SearchStats* stats) {
    bool found = false;
    for (unsigned d = 0; d <= bounds_.max_depth && !found && !exhausted_; ++d) found = prove(goal, d);
    if (stats) {
      stats->nodes = nodes_;
      stats->exhausted_budget = exhausted_;
    }
    if (!found) return std::nullopt;
    Derivation out;
    std::unordered_map<Formula, std::size_t, FormulaHash> line_of;
    emit(goal, out, line_of);
    return out;
  }

 private:
  void build_pool(const Formula& goal) {
    std::unordered_set<Formula, FormulaHash> seen;
    std::vector<Formula> pool;
    auto offer = [&](const Formula& f) {
      if (seen.insert(f).second) pool.push_back(f);
    };
    std::vector<Formula> roots(hyps_.begin(), hyps_.end());
    roots.push_back(goal);
    roots.insert(roots.end(), bounds_.hints.begin(), bounds_.hints.end());
    for (const auto& r : roots)
      for (const auto& s : subformulas(r)) {
        offer(s);
        if (calc_.meet_families() && !s.is_var()) {
          try {
            offer(embed(project(s, 1), 1, *calc_.combined()));
            offer(embed(project(s, 2), 2, *calc_.combined()));
          } catch (const Error&) {
          }
        }
      }
    std::stable_sort(pool.begin(), pool.end(), [](const Formula& a, const Formula& b) { return a.size() < b.size(); });
    if (pool.size() > bounds_.pool_limit) pool.resize(bounds_.pool_limit);
    pool_ = std::move(pool);
  }

  bool prove(const Formula& g, unsigned d) {
    if (hypset_.count(g)) {
      proven_.try_emplace(g, Proof{});
      return true;
    }
    if (proven_.count(g)) return true;
    if (d == 0 || exhausted_) return false;
    if (bounds_.liftable && g.is_var()) return false;
    if (auto f = failed_.find(g); f != failed_.end() && f->second >= d) return false;
    if (on_path_.count(g)) return false;
    if (++nodes_ > bounds_.max_nodes) {
      exhausted_ = true;
      return false;
    }
    on_path_.insert(g);
    bool ok = expand(g, d);
    on_path_.erase(g);
    if (!ok && !exhausted_) {
      auto& slot = failed_[g];
      slot = std::max(slot, d);
    }
    return ok;
  }

  bool all_proven(const std::vector<Formula>& premises, unsigned d) {
    for (const auto& p : premises) {
      if (auto f = failed_.find(p); f != failed_.end() && f->second >= d && !hypset_.count(p) && !proven_.count(p))
        return false;
    }
    for (const auto& p : premises)
      if (!prove(p, d)) return false;
    return true;
  }

  bool try_rule(const RuleInfo& info, const Formula& g, unsigned d) {
    auto sigma = match_formula(info.rule->conclusion, g);
    if (!sigma) return false;
    if (info.unbound.size() > bounds_.max_unbound) return false;
    std::vector<std::size_t> choice(info.unbound.size(), 0);
    if (!info.unbound.empty() && pool_.empty()) return false;
    while (true) {
      Substitution s = *sigma;
      for (std::size_t i = 0; i < choice.size(); ++i) s.bind(info.unbound[i], pool_[choice[i]]);
      std::vector<Formula> premises;
      premises.reserve(info.rule->premises.size());
      for (const auto& p : info.rule->premises) premises.push_back(apply_substitution(s, p));
      if (all_proven(premises, d - 1)) {
        proven_[g] = Proof{Step::RuleApp, info.rule, std::move(s), std::move(premises), 0};
        return true;
      }
      if (exhausted_) return false;
      std::size_t i = 0;
      for (; i < choice.size(); ++i) {
        if (++choice[i] < pool_.size()) break;
        choice[i] = 0;
      }
      if (i == choice.size()) return false;
    }
  }

  bool expand(const Formula& g, unsigned d) {
    for (const auto& info : rules_) {
      if (try_rule(info, g, d)) return true;
      if (exhausted_) return false;
    }
    if (!calc_.meet_families() || g.is_var()) return false;
    const auto& cs = *calc_.combined();

    for (int k = 1; k <= 2; ++k) {
      if (g != cs.falsum_of(k)) continue;
      Formula other = cs.falsum_of(3 - k);
      if (prove(other, d - 1)) {
        proven_[g] = Proof{Step::FalsumProp, nullptr, {}, {other}, 0};
        return true;
      }
    }

    Formula p1 = embed(project(g, 1), 1, cs), p2 = embed(project(g, 2), 2, cs);
    if (p1 != g && p2 != g && all_proven({p1, p2}, d - 1)) {
      proven_[g] = Proof{Step::Lift, nullptr, {}, {p1, p2}, 0};
      return true;
    }
    if (exhausted_) return false;

    for (int k = 1; k <= 2; ++k) {
      if ((k == 1 ? p1 : p2) != g) continue;
      std::vector<Formula> sources(hyps_.begin(), hyps_.end());
      sources.insert(sources.end(), pool_.begin(), pool_.end());
      for (const auto& phi : sources) {
        if (phi == g || phi.is_var()) continue;
        Formula shadow;
        try {
          shadow = embed(project(phi, k), k, cs);
        } catch (const Error&) {
          continue;
        }
        if (shadow != g) continue;
        if (prove(phi, d - 1)) {
          proven_[g] = Proof{Step::CoLift, nullptr, {}, {phi}, k};
          return true;
        }
        if (exhausted_) return false;
      }
    }
    return false;
  }

  std::size_t emit(const Formula& f, Derivation& out, std::unordered_map<Formula, std::size_t, FormulaHash>& line_of) {
    if (auto it = line_of.find(f); it != line_of.end()) return it->second;
    const Proof& p = proven_.at(f);
    std::vector<std::size_t> cited;
    for (const auto& prem : p.premises) cited.push_back(emit(prem, out, line_of));
    std::size_t n = 0;
    switch (p.kind) {
      case Step::Hyp: n = out.hyp(f); break;
      case Step::RuleApp: n = out.apply(f, p.rule->name, cited, p.witness); break;
      case Step::Lift: n = out.lift(f, cited[0], cited[1]); break;
      case Step::CoLift: n = out.colift(f, cited[0], p.component); break;
      case Step::FalsumProp: n = out.falsum(f, cited[0]); break;
    }
    line_of.emplace(f, n);
    return n;
  }

  const Calculus& calc_;
  const SearchBounds& bounds_;
  const std::vector<Formula>& hyps_;
  std::unordered_set<Formula, FormulaHash> hypset_;
  std::unordered_set<Formula, FormulaHash> on_path_;
  std::unordered_map<Formula, Proof, FormulaHash> proven_;
  std::unordered_map<Formula, unsigned, FormulaHash> failed_;
  std::vector<RuleInfo> rules_;
  std::vector<Formula> pool_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

std::optional<Derivation> bounded_proof_search(const Calculus& calc, const std::vector<Rule>& extra,
                                               const std::vector<Formula>& hyps, const Formula& goal,
                                               const SearchBounds& bounds, SearchStats* stats) {
  if (bounds.max_depth == 0 && std::find(hyps.begin(), hyps.end(), goal) == hyps.end()) return std::nullopt;
  Searcher s(calc, extra, hyps, goal, bounds);
  auto d = s.run(goal, stats);
  if (d) {
    Verdict v = check_derivation(*d, calc, extra, hyps);
    if (!v) throw Error("internal: search produced a derivation rejected at line " + std::to_string(v.line) + ": " +
                        v.reason);
  }
  return d;
}

}  // namespace meet

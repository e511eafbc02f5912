#include "meetlogic/rule.hpp"

#include <algorithm>

namespace meet {

Rule make_rule(std::string name, std::vector<Formula> premises, Formula conclusion) {
  if (!conclusion.valid()) throw Error("rule " + name + " has no conclusion");
  for (const auto& p : premises)
    if (!p.valid()) throw Error("rule " + name + " has an empty premise");
  return Rule{std::move(name), std::move(premises), std::move(conclusion)};
}

unsigned max_schema_index(const Rule& r) {
  unsigned m = max_schema_index(r.conclusion);
  for (const auto& p : r.premises) m = std::max(m, max_schema_index(p));
  return m;
}

Rule apply_substitution(const Substitution& s, const Rule& r) {
  Rule out{r.name, {}, apply_substitution(s, r.conclusion)};
  out.premises.reserve(r.premises.size());
  for (const auto& p : r.premises) out.premises.push_back(apply_substitution(s, p));
  return out;
}

std::optional<Substitution> match_rule(const Rule& r, const std::vector<Formula>& premises, const Formula& conclusion) {
  if (premises.size() != r.premises.size()) return std::nullopt;
  Substitution s;
  if (!match_into(r.conclusion, conclusion, s)) return std::nullopt;
  for (std::size_t i = 0; i < premises.size(); ++i)
    if (!match_into(r.premises[i], premises[i], s)) return std::nullopt;
  return s;
}

}  // namespace meet

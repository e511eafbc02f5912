#pragma once

#include <memory>
#include <string>
#include <vector>

#include "meetlogic/rule.hpp"
#include "meetlogic/signature.hpp"

namespace meet {

/// Signature of the meet-combination: every arity-n pair <c1|c2> with
/// c1 in the first and c2 in the second component.
class CombinedSignature {
 public:
  CombinedSignature(Signature s1, Signature s2);

  const Signature& component(int k) const;
  const Signature& s1() const { return s1_; }
  const Signature& s2() const { return s2_; }
  const Signature& combined() const { return combined_; }

  /// <c1|c2>, checking membership of both parts.
  Constructor pair(const Constructor& c1, const Constructor& c2) const;
  /// eta_k(c): c padded with the other component's verum of the same arity.
  Constructor embed_constructor(const Constructor& c, int k) const;
  /// eta_k applied to every constructor of component k, in signature order.
  std::vector<Constructor> embedded(int k) const;
  /// True iff c = eta_k(c') for some c' of component k.
  bool is_embedded(const Constructor& c, int k) const;

  /// eta_k(bot_k), the falsum of component k seen in the combined language.
  Formula falsum_of(int k) const;

 private:
  Signature s1_;
  Signature s2_;
  Signature combined_;
};

CombinedSignature combine_signatures(const Signature& s1, const Signature& s2);

/// eta_k: replaces each constructor of component k by its embedding.
Formula embed(const Formula& f, int k, const CombinedSignature& cs);
/// phi|_k: replaces each paired constructor by its k-th part.
Formula project(const Formula& f, int k);
/// rho_k(xi) := rho(xi)|_k.
Substitution project(const Substitution& s, int k);
Substitution embed(const Substitution& s, int k, const CombinedSignature& cs);
Rule embed(const Rule& r, int k, const CombinedSignature& cs);
Rule project(const Rule& r, int k);

/// One member of a tagged rule set, with its provenance.
struct TaggedRule {
  Rule rule;
  std::string source;   // name of the rule that was tagged
  Constructor tag;      // empty when the source rule was non-liberal
  int side = 0;         // inheriting component (0 when not recorded)
};

using TaggedRuleSet = std::vector<TaggedRule>;

/// Name given to the variant of `source` tagged with `c`.
std::string tagged_rule_name(const std::string& source, const Constructor& c);

/// {r} when r is non-liberal; otherwise one rule per constructor c in `tags`,
/// with the conclusion variable replaced by c(xi_{j+1}, ..., xi_{j+n}) in
/// premises and conclusion, j the largest index occurring in r.
TaggedRuleSet tag_rule(const Rule& r, const std::vector<Constructor>& tags, int side = 0);
TaggedRuleSet tag_rule(const Rule& r, const Signature& sig, int side = 0);
TaggedRuleSet tag_ruleset(const std::vector<Rule>& rs, const std::vector<Constructor>& tags, int side = 0);
TaggedRuleSet tag_ruleset(const std::vector<Rule>& rs, const Signature& sig, int side = 0);

std::vector<Rule> rules_of(const TaggedRuleSet& ts);

}  // namespace meet

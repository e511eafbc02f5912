#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "meetlogic/combination.hpp"
#include "meetlogic/parser.hpp"
#include "meetlogic/rule.hpp"

namespace meet {

/// Hilbert calculus: a named rule set plus, over a combined signature, the
/// schematic lifting (LFT), co-lifting (cLFT) and falsum propagation (FX)
/// families.
class Calculus {
 public:
  Calculus() = default;
  explicit Calculus(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::vector<Rule>& rules() const { return rules_; }

  /// Adds a rule; names must be unique within the calculus.
  void add(Rule r);
  void add_all(const std::vector<Rule>& rs);
  const Rule* find(std::string_view rule_name) const;

  /// Enables LFT, cLFT and FX over `cs`.
  void enable_meet_families(std::shared_ptr<const CombinedSignature> cs);
  bool meet_families() const { return combined_ != nullptr; }
  const CombinedSignature* combined() const { return combined_.get(); }
  std::shared_ptr<const CombinedSignature> combined_ptr() const { return combined_; }

 private:
  std::string name_;
  std::vector<Rule> rules_;
  std::unordered_map<std::string, std::size_t> index_;
  std::shared_ptr<const CombinedSignature> combined_;
};

enum class Step { Hyp, RuleApp, Lift, CoLift, FalsumProp };

/// How a derivation line was obtained.  Cited line numbers are 1-based.
struct Justification {
  Step kind = Step::Hyp;
  std::string rule;               // RuleApp
  std::vector<std::size_t> cited; // RuleApp: one per premise; Lift: two; CoLift/FalsumProp: one
  Substitution witness;           // RuleApp
  int component = 0;              // CoLift
};

struct DerivationLine {
  Formula formula;
  Justification why;
};

struct Derivation {
  std::vector<DerivationLine> lines;

  std::size_t size() const { return lines.size(); }
  bool empty() const { return lines.empty(); }
  const Formula& conclusion() const;

  /// Appends a line and returns its 1-based number.
  std::size_t hyp(Formula f);
  std::size_t apply(Formula f, std::string rule, std::vector<std::size_t> cited, Substitution witness);
  std::size_t lift(Formula f, std::size_t first, std::size_t second);
  std::size_t colift(Formula f, std::size_t cited, int k);
  std::size_t falsum(Formula f, std::size_t cited);
};

struct Verdict {
  bool accepted = false;
  std::size_t line = 0;  // first failing line (1-based), 0 when accepted
  std::string reason;

  explicit operator bool() const { return accepted; }
};

/// Checks every line against the calculus, the extra rules and the hypotheses.
Verdict check_derivation(const Derivation& d, const Calculus& calc, const std::vector<Rule>& extra,
                         const std::vector<Formula>& hyps);

/// The combined calculus: embedded rules of both components, liberal ones
/// tagged over the inheriting component's embedded constructors, plus LFT,
/// cLFT and FX.  Inherited rules are named `k:<name>` for component k.
Calculus assemble_meet_calculus(const Calculus& c1, const Calculus& c2, std::shared_ptr<const CombinedSignature> cs);

/// Name of rule `name` after inheritance from component k.
std::string inherited_rule_name(const std::string& name, int k);
/// Component-k rules embedded, renamed and tagged as assemble_meet_calculus does.
TaggedRuleSet inherit_rules(const std::vector<Rule>& rules, int k, const CombinedSignature& cs);

/// Text form, one line per step:
///   `N. formula ; HYP`
///   `N. formula ; RULE name sigma={1 := f; 2 := g} lines=2,3`
///   `N. formula ; LFT lines=i,j`   `N. formula ; CLFT line=i k=1`   `N. formula ; FX line=i`
std::string print_derivation(const Derivation& d, const PrintOptions& opts = {});
template <class Sig>
Derivation parse_derivation(std::string_view text, const Sig& sig);

std::string print_substitution(const Substitution& s, const PrintOptions& opts = {});

}  // namespace meet

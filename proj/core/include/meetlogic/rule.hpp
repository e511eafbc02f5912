#pragma once

#include <string>
#include <vector>

#include "meetlogic/formula.hpp"

namespace meet {

/// Finitary rule  alpha_1 ... alpha_m / beta.  Axioms have no premises.
struct Rule {
  std::string name;
  std::vector<Formula> premises;
  Formula conclusion;

  /// The conclusion is a bare schema variable.
  bool liberal() const { return conclusion.is_var(); }
  bool axiom() const { return premises.empty(); }

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.premises == b.premises && a.conclusion == b.conclusion;
  }
};

Rule make_rule(std::string name, std::vector<Formula> premises, Formula conclusion);

/// Largest schema-variable index over premises and conclusion.
unsigned max_schema_index(const Rule& r);

Rule apply_substitution(const Substitution& s, const Rule& r);

/// Matches the rule's premises and conclusion against a candidate instance.
std::optional<Substitution> match_rule(const Rule& r, const std::vector<Formula>& premises, const Formula& conclusion);

}  // namespace meet

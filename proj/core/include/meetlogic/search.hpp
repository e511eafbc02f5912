#pragma once

#include <optional>
#include <vector>

#include "meetlogic/calculus.hpp"

namespace meet {

struct SearchBounds {
  /// Longest chain of rule applications from a hypothesis or axiom to the goal.
  unsigned max_depth = 4;
  /// Goal expansions before the search gives up.
  std::size_t max_nodes = 200000;
  /// Premise variables not fixed by the conclusion are filled from a pool of
  /// subformulas; rules with more such variables are skipped.
  unsigned max_unbound = 1;
  std::size_t pool_limit = 48;
  /// Only hypothesis lines may be bare schema variables (needed when the
  /// result is to be lifted into a combined calculus).
  bool liftable = false;
  /// Extra formulas offered to the pool.
  std::vector<Formula> hints;
};

struct SearchStats {
  std::size_t nodes = 0;
  bool exhausted_budget = false;
};

/// Iterative-deepening backward search.  A returned derivation always passes
/// check_derivation; nullopt is inconclusive, never a non-derivability claim.
std::optional<Derivation> bounded_proof_search(const Calculus& calc, const std::vector<Rule>& extra,
                                               const std::vector<Formula>& hyps, const Formula& goal,
                                               const SearchBounds& bounds = {}, SearchStats* stats = nullptr);

}  // namespace meet

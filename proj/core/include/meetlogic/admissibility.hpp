#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "meetlogic/calculus.hpp"
#include "meetlogic/combination.hpp"
#include "meetlogic/logic.hpp"
#include "meetlogic/search.hpp"

namespace meet {

struct OracleAnswer {
  bool admissible = false;
  /// False when the answer comes from a bounded search that found no refutation.
  bool exact = true;
};

/// Admissibility decision for one component logic.
struct AdmissibilityOracle {
  std::string tag;
  bool exact = true;
  std::function<OracleAnswer(const std::vector<Formula>& premises, const Formula& conclusion)> decide;

  OracleAnswer operator()(const std::vector<Formula>& premises, const Formula& conclusion) const;
};

/// Oracle answering from a table; lines are `1 p1 ; p2 / c` or `0 ... / c`
/// (`#` starts a comment).  Rules missing from the table raise Error.
AdmissibilityOracle table_oracle(std::string_view text, const Signature& sig, std::string tag = "table");

enum class Admissibility { Admissible, NotAdmissible, Inconclusive };
std::string to_string(Admissibility v);

struct BruteForceResult {
  Admissibility verdict = Admissibility::Inconclusive;
  bool exact = false;
  std::optional<Substitution> witness;
};

struct BruteForceBounds {
  /// Candidate images tried for each rule variable, in this order:
  /// bot, top, xi1, neg xi1, xi2, ...
  std::size_t pool = 4;
  std::size_t max_substitutions = 200000;
};

/// Exact for structurally complete bundles with characteristic matrices
/// (admissible iff the premises entail the conclusion); otherwise searches
/// substitutions for a refutation and reports Inconclusive when none is found.
BruteForceResult brute_force_admissible(const LogicBundle& logic, const std::vector<Formula>& premises,
                                        const Formula& beta, const BruteForceBounds& bounds = {});

/// Oracle backed by the bundle's fixtures and brute_force_admissible.  An
/// inconclusive search is answered as admissible with exact = false.
AdmissibilityOracle bundle_oracle(const LogicBundle& logic, const BruteForceBounds& bounds = {});

struct MeetDecision {
  bool admissible = false;
  bool exact = true;
  bool a1 = false;
  bool a2 = false;
  /// The answer of the third call when one was made.
  std::optional<bool> fallback;
  int calls = 0;
  std::string report() const;
};

/// The combined decision: a_k := o_k(premises|_k, beta|_k); equal answers are
/// returned as is; otherwise the side that said 1 is asked whether its
/// projected premises admit its falsum.
MeetDecision decide_admissible_meet(const AdmissibilityOracle& o1, const AdmissibilityOracle& o2,
                                    const std::vector<Formula>& premises, const Formula& beta,
                                    const CombinedSignature& cs);

/// Gamma |-^R goal: proof search with the basis rules as extra rules.
std::optional<Derivation> derivable_with_basis(const std::vector<Formula>& premises, const Formula& goal,
                                               const std::vector<Rule>& basis, const Calculus& calc,
                                               const SearchBounds& bounds = {});

/// Each basis embedded into the combination and tagged over its side's
/// embedded constructors (rule names `k:<name>`).
TaggedRuleSet combined_basis(const std::vector<Rule>& b1, const std::vector<Rule>& b2, const CombinedSignature& cs);

struct StructuralSampleEntry {
  Rule rule;
  OracleAnswer oracle;
  bool derivable = false;
  /// Admissible by the oracle but not found derivable within bounds.
  bool candidate = false;
};

struct StructuralSampleReport {
  std::vector<StructuralSampleEntry> entries;
  std::size_t agreements = 0;
  std::size_t candidates = 0;
  /// Oracle says not admissible but a derivation was found.
  std::size_t contradictions = 0;
};

StructuralSampleReport check_structural_completeness_sample(const LogicBundle& logic,
                                                            const AdmissibilityOracle& oracle,
                                                            const std::vector<Rule>& rules,
                                                            const SearchBounds& bounds = {});

}  // namespace meet

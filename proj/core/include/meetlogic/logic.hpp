#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meetlogic/algebras.hpp"
#include "meetlogic/calculus.hpp"
#include "meetlogic/semantics.hpp"
#include "meetlogic/treetools.hpp"

namespace meet {

/// How a bundle confirms theoremhood claims such as identity laws.
enum class Verification {
  Matrices,   // validity in the bundle's finite matrices
  IplProver,  // ipl_theorem
};

/// A matrix logic with everything the workbench needs about it.
struct LogicBundle {
  std::string name;
  std::string citation;
  Signature sig;
  Calculus calculus;
  std::vector<Matrix> matrices;
  /// The matrices are sound and complete for theoremhood.
  bool characteristic = false;
  /// Declared fixture data, not computed.
  bool structurally_complete = false;
  Verification verification = Verification::Matrices;
  std::vector<IdentityProfile> identities;
  CompletionProfile completion;
  std::vector<Rule> basis;
  std::size_t basis_bound = 0;
  std::vector<Rule> admissible_fixtures;
  std::vector<Rule> nonadmissible_fixtures;

  bool has_equivalence() const { return sig.find("iff").has_value(); }
  /// Theoremhood by the verification method.  Exact for the prover and for
  /// characteristic matrices; otherwise a necessary condition only.
  bool theorem(const Formula& f) const;
  bool theorem_exact() const { return verification == Verification::IplProver || characteristic; }
  const IdentityProfile* identity(const std::string& constructor) const;
  const Rule* fixture(const std::string& rule_name) const;
};

/// Sectioned text:
///   [logic]      name = .. / tag = .. / structurally_complete = true|false /
///                characteristic = true|false / verification = matrices|ipl / citation = ..
///   [signature]  `name arity` per line (top, bot and topn.N are implicit)
///   [rules]      `NAME: p1 ; p2 / c`   (axioms: `NAME: / c`)
///   [matrix]     matrix text (see parse_matrix); may repeat
///   [generate]   boolean | goedel N | lukasiewicz3 | heyting chain N | heyting fork B |
///                kripke S43 W | kripke GL W
///   [profiles]   identity C position=K fillers=F1,F2 completion=J  |  completion standard  |
///                completion C top=HEAD:T,T bot=HEAD:T,T
///   [basis]      `NAME: ... / ...`  |  family visser  |  family gl
///   [fixtures]   admissible NAME: ... / ...  |  nonadmissible NAME: ... / ...
/// `tag_override` replaces the declared tag; `basis_bound` instantiates families for n = 1..bound.
LogicBundle parse_logic_definition(std::string_view text, std::size_t basis_bound = 3,
                                   const std::optional<std::string>& tag_override = std::nullopt);

/// Visser's rules V_1..V_bound; primed variables are xi_{n+2+i} and xi_{2n+3}.
std::vector<Rule> visser_rules(const Signature& sig, std::size_t bound);
/// The GL basis family for n = 1..bound; xi' = xi_{n+1}, xi'' = xi_{n+2}.
std::vector<Rule> gl_basis_rules(const Signature& sig, std::size_t bound);

std::vector<std::string> preset_names();
/// Definition text of a preset (CPL, G3, IPL, S43, GL).
std::string_view preset_definition(std::string_view name);
LogicBundle load_preset(std::string_view name, std::size_t basis_bound = 3,
                        const std::optional<std::string>& tag_override = std::nullopt);

}  // namespace meet

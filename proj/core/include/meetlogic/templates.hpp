#pragma once

#include <vector>

#include "meetlogic/calculus.hpp"

namespace meet {

/// A derivation in one component calculus, together with the rules it may
/// cite (the calculus and, in basis mode, the component basis).
struct ComponentProof {
  Derivation derivation;
  const Calculus* calculus = nullptr;
  std::vector<Rule> extra;
};

/// Both projected rules hold: HYP lines for the premises, cLFT to component 1,
/// the lifted component-1 derivation of beta|1, cLFT to component 2, the
/// lifted component-2 derivation of beta|2, and a final LFT yielding beta.
/// `d1` must derive beta|1 from the alpha_i|1 (and likewise `d2`).
/// Component rule r is cited as `k:r`, or as its tagged variant when r is
/// liberal.  Throws Error on endpoint mismatch.
Derivation build_both_admissible_derivation(const std::vector<Formula>& premises, const Formula& beta,
                                            const ComponentProof& d1, const ComponentProof& d2,
                                            const CombinedSignature& cs);

/// One side is vacuous: `dfalsum` derives bot_j from the alpha_i|j;
/// `exfalso_j` derives beta|j from bot_j, FX gives bot_k, and `exfalso_k`
/// derives beta|k from bot_k; LFT closes.
Derivation build_vacuous_side_derivation(const std::vector<Formula>& premises, const Formula& beta, int j,
                                         const ComponentProof& dfalsum, const ComponentProof& exfalso_j,
                                         const ComponentProof& exfalso_k, const CombinedSignature& cs);

/// Two-line derivation `bot ; HYP` then `target` by the calculus's ex falso
/// rule bot / xi (one line when target is bot).  Throws when the calculus has
/// no such rule.
ComponentProof ex_falso_continuation(const Calculus& calc, const Signature& sig, const Formula& target);

/// The extra rules a lifted ComponentProof relies on: embedded and tagged
/// versions of `proof.extra` for component k.
std::vector<Rule> lifted_extra_rules(const ComponentProof& proof, int k, const CombinedSignature& cs);

}  // namespace meet

#pragma once

#include <vector>

#include "meetlogic/formula.hpp"

namespace meet {

/// Intuitionistic theoremhood by a contraction-free sequent calculus (G4ip),
/// which terminates without loop checking.  Constructors are read by name:
/// top, bot, neg, and, or, ->, iff and the verum family topn.N; any other
/// name raises Error.
bool ipl_theorem(const Formula& f);
bool ipl_derivable(const std::vector<Formula>& hyps, const Formula& goal);

}  // namespace meet

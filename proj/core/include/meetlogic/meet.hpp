#pragma once

#include <memory>
#include <string>
#include <vector>

#include "meetlogic/logic.hpp"

namespace meet {

/// Two logics with their combined signature and assembled calculus.
struct MeetSystem {
  LogicBundle l1;
  LogicBundle l2;
  std::shared_ptr<const CombinedSignature> cs;
  Calculus calculus;

  const LogicBundle& logic(int k) const { return k == 1 ? l1 : l2; }
  /// Products of every pair of component matrices whose carrier has at most
  /// `max_carrier` elements.
  std::vector<Matrix> product_matrices(std::size_t max_carrier = 256) const;
};

/// Component tags must differ.
MeetSystem make_meet_system(LogicBundle l1, LogicBundle l2);
/// Presets by name; a preset combined with itself is retagged NAME1 / NAME2.
MeetSystem load_meet_system(std::string_view name1, std::string_view name2, std::size_t basis_bound = 3);

}  // namespace meet

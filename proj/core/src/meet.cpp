#include "meetlogic/meet.hpp"

namespace meet {

std::vector<Matrix> MeetSystem::product_matrices(std::size_t max_carrier) const {
  std::vector<Matrix> out;
  for (const auto& m1 : l1.matrices)
    for (const auto& m2 : l2.matrices)
      if (m1.carrier() * m2.carrier() <= max_carrier) out.push_back(product_matrix(m1, m2, *cs));
  return out;
}

MeetSystem make_meet_system(LogicBundle l1, LogicBundle l2) {
  if (l1.sig.tag() == l2.sig.tag())
    throw Error("both components carry the tag '" + l1.sig.tag() + "'; retag one of them");
  MeetSystem m{std::move(l1), std::move(l2), nullptr, {}};
  m.cs = std::make_shared<const CombinedSignature>(m.l1.sig, m.l2.sig);
  m.calculus = assemble_meet_calculus(m.l1.calculus, m.l2.calculus, m.cs);
  return m;
}

MeetSystem load_meet_system(std::string_view name1, std::string_view name2, std::size_t basis_bound) {
  if (name1 == name2)
    return make_meet_system(load_preset(name1, basis_bound, std::string(name1) + "1"),
                            load_preset(name2, basis_bound, std::string(name2) + "2"));
  return make_meet_system(load_preset(name1, basis_bound), load_preset(name2, basis_bound));
}

}  // namespace meet

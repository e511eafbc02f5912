#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "meetlogic/semantics.hpp"

namespace meet {

/// Interpretation by constructor name (top, bot, neg, and, or, ->, iff, box,
/// dia); the verum family is filled in as constant top.  Unknown names in
/// `sig` raise Error.
using NamedOperation = std::function<unsigned(std::string_view name, std::span<const unsigned> args)>;
Matrix matrix_from_operations(std::string name, const Signature& sig, std::size_t carrier,
                              std::vector<unsigned> designated, const NamedOperation& op);

/// Two-valued Boolean matrix (0 false, 1 true).
Matrix boolean_matrix(const Signature& sig);
/// Goedel chain with n values 0 < ... < n-1, designated {n-1}.
Matrix goedel_chain(const Signature& sig, std::size_t n);
/// Lukasiewicz 3-valued matrix, designated {2}.
Matrix lukasiewicz3(const Signature& sig);

/// Finite poset given by its order relation leq[i][j] (i <= j).
struct Poset {
  std::size_t size = 0;
  std::vector<std::vector<bool>> leq;
};
Poset chain_poset(std::size_t n);
/// One root below `branches` pairwise incomparable maximal points.
Poset fork_poset(std::size_t branches);
/// Heyting algebra of up-sets of a poset (designated: the whole poset).
Matrix heyting_upsets(std::string name, const Signature& sig, const Poset& p);

enum class FrameClass { Any, S43, GL };

/// Finite Kripke frame.  S4.3 frames are reflexive, transitive and weakly
/// connected (wRu and wRv imply uRv or vRu); GL frames are transitive and
/// irreflexive.
struct KripkeFrame {
  std::size_t worlds = 0;
  std::vector<std::vector<bool>> r;
  FrameClass kind = FrameClass::Any;

  bool reflexive() const;
  bool irreflexive() const;
  bool transitive() const;
  bool weakly_connected() const;
  /// Throws Error when the frame violates its class constraints.
  void validate() const;
};

/// Power-set algebra of the frame: boolean connectives, box U = {w : wRu implies u in U},
/// dia = neg box neg; designated {W}.
Matrix kripke_matrix(const KripkeFrame& f, const Signature& sig);

/// All frames of the class with 1..max_worlds worlds, one per isomorphism type.
std::vector<KripkeFrame> enumerate_frames(FrameClass kind, std::size_t max_worlds);

}  // namespace meet

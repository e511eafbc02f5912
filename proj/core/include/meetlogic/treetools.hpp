#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "meetlogic/signature.hpp"

namespace meet {

/// Decomposition tree: one vertex per subformula occurrence (pre-order, the
/// root is vertex 0), one edge per argument position.
struct DecompTree {
  struct Vertex {
    Formula formula;
    std::vector<std::size_t> children;  // vertex ids in argument order
    std::size_t parent = 0;             // unused for the root
  };
  std::vector<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  std::size_t outdegree(std::size_t v) const { return vertices[v].children.size(); }
};

DecompTree decomposition_tree(const Formula& f);

/// Vertex map of an embedding; edges follow (each child edge of v maps to the
/// edge into the image of the child).
struct TreeEmbedding {
  std::vector<std::size_t> vertex_map;
};

/// An embedding of t1 into t2: injective on vertices and edges, preserving
/// source/target and the outdegree of every edge source.  Child-order
/// preserving maps are tried first.
std::optional<TreeEmbedding> find_embedding(const DecompTree& t1, const DecompTree& t2);
bool is_embedding(const DecompTree& t1, const DecompTree& t2, const TreeEmbedding& e);

/// Embeddings exist in both directions.
bool trees_equiv(const DecompTree& t1, const DecompTree& t2);
bool trees_equiv(const Formula& f1, const Formula& f2);

/// Canonical string of the unordered outdegree-labelled shape.
std::string shape_key(const Formula& f);

/// Which constant a completion must be equivalent to.
enum class Target { Top, Bot };

/// One row of a completion table: for head `name`, target T, the result is
/// `head`(children) where child i is the completion of argument i towards
/// child_targets[i].
struct CompletionCase {
  std::string head;
  std::vector<Target> child_targets;
};

/// Completion tables keyed by (constructor name, target).  Leaves (variables
/// and nullaries) complete to top or bot.
struct CompletionProfile {
  std::map<std::pair<std::string, Target>, CompletionCase> cases;

  void set(const std::string& name, Target t, CompletionCase c) { cases[{name, t}] = std::move(c); }
  bool supports(const std::string& name) const;
  /// The tables for top, bot, neg, and, or, ->, iff, box, dia and topn.1/2.
  static CompletionProfile standard();
};

/// delta with t(delta) ~ t(psi) and |- target <-> delta.  `root_head`, when
/// given, replaces the table's head at the root by another same-arity
/// constructor of `sig` whose table entry is used instead.
Formula completion_formula(const Formula& psi, Target target, const Signature& sig, const CompletionProfile& profile,
                           const std::optional<std::string>& root_head = std::nullopt);

/// Constructor with identities at position `position` (1-based), the given
/// nullary fillers at the other positions, and pairwise completion for
/// `completion_position`.
struct IdentityProfile {
  std::string constructor;
  std::size_t position = 1;
  std::vector<std::string> fillers;  // one per argument; ignored at `position`
  std::size_t completion_position = 2;
};

/// psi over sig_b with t(psi) ~ t(f): heads replaced by a fixed same-arity
/// representative of sig_b, variables kept.
Formula transliterate_shape(const Formula& f, const Signature& sig_b, const CompletionProfile* prefer = nullptr);

struct EqualizedPair {
  Formula first;
  Formula second;
};

/// Wraps f1 and f2 in the complementary constructors so that the results are
/// equivalent to the inputs and have equivalent decomposition trees.
EqualizedPair equalize_pair(const Formula& f1, const Signature& s1, const IdentityProfile& p1,
                            const CompletionProfile& c1, const Formula& f2, const Signature& s2,
                            const IdentityProfile& p2, const CompletionProfile& c2);

}  // namespace meet

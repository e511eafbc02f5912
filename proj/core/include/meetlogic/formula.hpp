#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace meet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
struct ConstructorData;
struct FormulaNode;
}  // namespace detail

/// Interned language constructor.
///
/// A constructor is either a component constructor (a name, the tag of the
/// logic it belongs to, and an arity) or the meet-combination of two
/// component constructors of equal arity.  Constructors are interned, so
/// equality and hashing are pointer operations.
class Constructor {
 public:
  Constructor() = default;

  static Constructor make(std::string_view name, std::string_view tag, std::size_t arity);
  /// The paired constructor <c1|c2>; both parts must be component constructors of equal arity.
  static Constructor meet(const Constructor& first, const Constructor& second);

  bool valid() const { return data_ != nullptr; }
  bool is_pair() const;
  std::size_t arity() const;
  /// Component name; throws for paired constructors.
  const std::string& name() const;
  /// Component tag; throws for paired constructors.
  const std::string& tag() const;
  /// k-th part (k = 1 or 2) of a paired constructor.
  Constructor part(int k) const;
  /// Concrete syntax: `name`, `name.TAG` or `<name1.TAG1|name2.TAG2>`.
  const std::string& spelling() const;

  std::size_t hash() const { return std::hash<const void*>{}(data_); }

  friend bool operator==(const Constructor& a, const Constructor& b) { return a.data_ == b.data_; }
  /// Deterministic order by spelling, then arity.
  friend bool operator<(const Constructor& a, const Constructor& b);

 private:
  explicit Constructor(const detail::ConstructorData* d) : data_(d) {}
  const detail::ConstructorData* data_ = nullptr;
};

/// Immutable formula: a schema variable xi_k (k >= 1) or a constructor applied
/// to as many arguments as its arity.  Copies share structure.
class Formula {
 public:
  Formula() = default;

  static Formula var(unsigned index);
  static Formula app(const Constructor& head, std::vector<Formula> args = {});

  bool valid() const { return node_ != nullptr; }
  bool is_var() const;
  unsigned var_index() const;
  const Constructor& head() const;
  std::span<const Formula> args() const;
  const Formula& arg(std::size_t i) const { return args()[i]; }

  std::size_t hash() const;
  /// Number of nodes.
  std::size_t size() const;
  /// Height of the tree; variables and nullary applications have depth 0.
  unsigned depth() const;

  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  /// Structural total order (used for deterministic containers).
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};
struct ConstructorHash {
  std::size_t operator()(const Constructor& c) const { return c.hash(); }
};

/// Finite map from schema-variable indices to formulas; other variables are fixed.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const unsigned, Formula>> init) : map_(init) {}

  void bind(unsigned var, Formula f) { map_[var] = std::move(f); }
  const Formula* find(unsigned var) const;
  bool contains(unsigned var) const { return map_.count(var) != 0; }
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }

  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }

  friend bool operator==(const Substitution& a, const Substitution& b) { return a.map_ == b.map_; }

 private:
  std::map<unsigned, Formula> map_;
};

Formula apply_substitution(const Substitution& s, const Formula& f);

/// s2 after s1: apply(compose(s2, s1), f) == apply(s2, apply(s1, f)).
Substitution compose(const Substitution& s2, const Substitution& s1);

/// Least substitution sending `pattern` to `target`, or nullopt.
std::optional<Substitution> match_formula(const Formula& pattern, const Formula& target);

/// Extends `s` so that apply(s, pattern) == target; leaves `s` in an
/// unspecified state and returns false when no extension exists.
bool match_into(const Formula& pattern, const Formula& target, Substitution& s);

/// Largest schema-variable index occurring in `f`, or 0.
unsigned max_schema_index(const Formula& f);

std::set<unsigned> variables(const Formula& f);
void collect_variables(const Formula& f, std::set<unsigned>& out);

/// All subformula occurrences in pre-order.
std::vector<Formula> subformulas(const Formula& f);

}  // namespace meet

template <>
struct std::hash<meet::Formula> {
  std::size_t operator()(const meet::Formula& f) const { return f.hash(); }
};
template <>
struct std::hash<meet::Constructor> {
  std::size_t operator()(const meet::Constructor& c) const { return c.hash(); }
};

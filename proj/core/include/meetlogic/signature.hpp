#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meetlogic/formula.hpp"

namespace meet {

/// Conventional names of the constructors every signature must carry.
inline constexpr const char* kVerumName = "top";
inline constexpr const char* kFalsumName = "bot";
/// Name of the n-ary verum constructor: "topn.<n>".
std::string verum_family_name(std::size_t arity);

/// Arity-indexed family of constructors with distinguished verum, falsum and,
/// for every inhabited arity n >= 1, an n-ary verum.
class Signature {
 public:
  Signature() = default;

  /// Builds and validates a signature from explicit constructors.
  Signature(std::string tag, std::vector<Constructor> constructors, Constructor verum, Constructor falsum,
            std::map<std::size_t, Constructor> verum_family);

  const std::string& tag() const { return tag_; }

  /// Constructors of arity n in insertion order (empty when n is uninhabited).
  const std::vector<Constructor>& constructors(std::size_t arity) const;
  std::vector<Constructor> all() const;
  std::vector<std::size_t> arities() const;
  std::size_t size() const;

  bool contains(const Constructor& c) const;
  /// Lookup by bare name (names are unique across the whole signature).
  std::optional<Constructor> find(std::string_view name) const;

  const Constructor& verum() const { return verum_; }
  const Constructor& falsum() const { return falsum_; }
  /// Verum of arity n; n == 0 gives verum().
  const Constructor& verum_of_arity(std::size_t n) const;
  bool is_verum_family(const Constructor& c) const;

  Formula top() const { return Formula::app(verum_); }
  Formula bot() const { return Formula::app(falsum_); }

  /// True iff every constructor occurring in f belongs to this signature.
  bool well_formed(const Formula& f) const;
  /// Throws Error naming the first foreign constructor.
  void require_well_formed(const Formula& f) const;

  /// Same arity inhabitation pattern ("similar signatures").
  bool similar_to(const Signature& other) const;

 private:
  std::string tag_;
  std::map<std::size_t, std::vector<Constructor>> by_arity_;
  std::map<std::string, Constructor, std::less<>> by_name_;
  Constructor verum_;
  Constructor falsum_;
  std::map<std::size_t, Constructor> verum_family_;
};

/// Component signature with the given (name, arity) constructors plus the
/// implicit top, bot and topn.<n> constructors, all tagged with `tag`.
Signature make_signature(const std::string& tag, const std::vector<std::pair<std::string, std::size_t>>& ops);

/// Same substitution applied to formula images, with a well-formedness
/// check of every image against `sig`.
Formula apply_substitution(const Substitution& s, const Formula& f, const Signature& sig);

}  // namespace meet

#pragma once

#include <functional>
#include <map>
#include <set>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "meetlogic/combination.hpp"
#include "meetlogic/rule.hpp"
#include "meetlogic/signature.hpp"

namespace meet {

/// Finite logical matrix: carrier {0, ..., n-1}, one total operation table
/// per constructor (row-major, first argument most significant) and a
/// nonempty designated subset.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::string name, std::size_t carrier, std::vector<unsigned> designated);

  const std::string& name() const { return name_; }
  void rename(std::string name) { name_ = std::move(name); }
  std::size_t carrier() const { return carrier_; }
  bool designated(unsigned a) const { return designated_.at(a); }
  std::vector<unsigned> designated_values() const;

  void set_table(const Constructor& c, std::vector<unsigned> table);
  bool interprets(const Constructor& c) const { return tables_.count(c) != 0; }
  const std::vector<unsigned>& table(const Constructor& c) const;
  unsigned apply(const Constructor& c, std::span<const unsigned> args) const;
  std::vector<Constructor> constructors() const;

  /// Adds constant tables for missing members of the verum family.
  void fill_verum_family(const Signature& sig);
  /// Throws Error unless every constructor of `sig` is interpreted, bot is
  /// undesignated, top is designated and each topn is the constant top.
  void validate(const Signature& sig) const;

 private:
  std::string name_;
  std::size_t carrier_ = 0;
  std::vector<bool> designated_;
  std::unordered_map<Constructor, std::vector<unsigned>, ConstructorHash> tables_;
};

using Assignment = std::map<unsigned, unsigned>;

/// Homomorphic evaluation; throws Error when a variable is unassigned.
unsigned eval(const Matrix& m, const Assignment& asg, const Formula& f);

/// Every assignment of `vars` into the carrier, in lexicographic order,
/// until `visit` returns false.
void for_each_assignment(const Matrix& m, const std::set<unsigned>& vars,
                         const std::function<bool(const Assignment&)>& visit);

bool holds(const Matrix& m, const Formula& f);
bool entails(const Matrix& m, const std::vector<Formula>& gamma, const Formula& f);
bool entails(const std::vector<Matrix>& ms, const std::vector<Formula>& gamma, const Formula& f);

struct Countermodel {
  std::size_t matrix = 0;  // index into the matrix list
  Assignment assignment;
};
std::optional<Countermodel> find_countermodel(const std::vector<Matrix>& ms, const std::vector<Formula>& gamma,
                                              const Formula& f);

/// Carrier A1 x A2 encoded as a1 * |A2| + a2; operations componentwise.
Matrix product_matrix(const Matrix& m1, const Matrix& m2, const CombinedSignature& cs);
unsigned product_value(const Matrix& m2, unsigned a1, unsigned a2);
std::pair<unsigned, unsigned> product_parts(const Matrix& m2, unsigned a);

bool check_rule_soundness(const std::vector<Matrix>& ms, const Rule& r);

/// Text form:
///   name NAME            (optional)
///   carrier N
///   designated i j ...
///   op NAME t0 t1 ...    (one line per constructor, row-major)
std::string print_matrix(const Matrix& m);
Matrix parse_matrix(std::string_view text, const Signature& sig);

}  // namespace meet

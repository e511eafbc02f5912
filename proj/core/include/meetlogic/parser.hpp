#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "meetlogic/combination.hpp"
#include "meetlogic/rule.hpp"
#include "meetlogic/signature.hpp"

namespace meet {

/// Parse failure with the 1-based column where it was detected.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t column);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Grammar:
///   formula  := infix expression over primaries
///   primary  := xi<k> | name | name '(' formula {',' formula} ')' | unary-name primary | '(' formula ')'
///   name     := ident{.segment} | '->'{.segment} | '<' name '|' name '>'
/// Infix binary names, loosest first: iff, -> (right associative), or, and.
/// A trailing `.TAG` selects the component whose tag is TAG; an empty tag
/// (`->.`) means the signature's own tag.
Formula parse_formula(std::string_view text, const Signature& sig);

/// Over a combined signature a bare name shared by both components denotes
/// the pair of the two same-named constructors; a name found on one side
/// only, or a `name.TAG` token, denotes that component's embedding.
Formula parse_formula(std::string_view text, const CombinedSignature& cs);

struct PrintOptions {
  /// Print component constructors as `name.TAG` instead of `name`.
  bool qualify = false;
  /// Print embedded pairs <c|topn> as `name.TAG` (needs `combined`).
  const CombinedSignature* abbreviate = nullptr;
};

/// Prefix form: `name(arg1, arg2)`, nullaries bare, pairs as `<n1.T1|n2.T2>`.
std::string print_formula(const Formula& f, const PrintOptions& opts = {});

/// `p1 ; p2 / c` (or `/ c` for axioms).
std::string print_rule(const Rule& r, const PrintOptions& opts = {});

/// Inline rule syntax `p1 ; p2 / c`.
template <class Sig>
Rule parse_inline_rule(std::string_view text, const Sig& sig, std::string name = "");

/// Rule-file syntax: premises one per line, a `---` line, then the conclusion.
/// Blank lines and lines starting with '#' are ignored.
template <class Sig>
Rule parse_rule_file(std::string_view text, const Sig& sig, std::string name = "");

std::string print_rule_file(const Rule& r, const PrintOptions& opts = {});

/// Splits on `sep` and trims each piece.
std::vector<std::string> split_trim(std::string_view text, char sep);
std::string trim(std::string_view s);

}  // namespace meet

#include "meetlogic/parser.hpp"

#include <cctype>
#include <functional>
#include <optional>

namespace meet {

SyntaxError::SyntaxError(const std::string& what, std::size_t column)
    : Error(what + " (column " + std::to_string(column) + ")"), column_(column) {}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_trim(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

enum class Tok { Name, Pair, Var, LParen, RParen, Comma, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;    // Name: full spelling; Pair: first part
  std::string second;  // Pair: second part
  unsigned var = 0;
  std::size_t column = 0;
};

int infix_precedence(std::string_view name) {
  if (name == "iff") return 0;
  if (name == "->") return 1;
  if (name == "or") return 2;
  if (name == "and") return 3;
  return -1;
}

std::string_view base_name(const Constructor& c) {
  if (!c.is_pair()) return c.name();
  const auto& first = c.part(1).name();
  if (first.rfind("topn.", 0) == 0) return c.part(2).name();
  return first;
}

/// (name, tag) splits of a token: the whole token untagged, then the split
/// at the last '.'.
struct NameSplit {
  std::string name;
  std::optional<std::string> tag;
};

std::vector<NameSplit> name_splits(const std::string& token) {
  std::vector<NameSplit> out{{token, std::nullopt}};
  auto dot = token.rfind('.');
  if (dot != std::string::npos && dot > 0) out.push_back({token.substr(0, dot), token.substr(dot + 1)});
  return out;
}

std::optional<Constructor> resolve_in(const Signature& sig, const std::string& token) {
  for (const auto& split : name_splits(token)) {
    if (split.tag && !split.tag->empty() && *split.tag != sig.tag()) continue;
    if (auto c = sig.find(split.name)) return c;
  }
  return std::nullopt;
}

class Parser {
 public:
  using NameResolver = std::function<Constructor(const std::string&, std::size_t)>;
  using PairResolver = std::function<Constructor(const std::string&, const std::string&, std::size_t)>;

  Parser(std::string_view text, NameResolver names, PairResolver pairs)
      : text_(text), names_(std::move(names)), pairs_(std::move(pairs)) {
    advance();
  }

  Formula parse_all() {
    Formula f = expr(0);
    if (tok_.kind != Tok::End) fail("unexpected trailing input '" + describe(tok_) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, tok_.column); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t col) const { throw SyntaxError(what, col); }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::Name: return t.text;
      case Tok::Pair: return "<" + t.text + "|" + t.second + ">";
      case Tok::Var: return "xi" + std::to_string(t.var);
      case Tok::LParen: return "(";
      case Tok::RParen: return ")";
      case Tok::Comma: return ",";
      case Tok::End: return "end of input";
    }
    return "?";
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string lex_name() {
    std::size_t start = pos_;
    if (text_.compare(pos_, 2, "->") == 0) {
      pos_ += 2;
    } else if (pos_ < text_.size() && ident_start(text_[pos_])) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    } else {
      fail_at("expected a constructor name", pos_ + 1);
    }
    while (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void advance() {
    skip_ws();
    tok_ = Token{};
    tok_.column = pos_ + 1;
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (c == '(') { tok_.kind = Tok::LParen; ++pos_; return; }
    if (c == ')') { tok_.kind = Tok::RParen; ++pos_; return; }
    if (c == ',') { tok_.kind = Tok::Comma; ++pos_; return; }
    if (c == '<') {
      ++pos_;
      skip_ws();
      std::string first = lex_name();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '|') fail_at("expected '|' in paired constructor", pos_ + 1);
      ++pos_;
      skip_ws();
      std::string second = lex_name();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '>') fail_at("expected '>' closing paired constructor", pos_ + 1);
      ++pos_;
      tok_.kind = Tok::Pair;
      tok_.text = std::move(first);
      tok_.second = std::move(second);
      return;
    }
    if (c == '-' || ident_start(c)) {
      std::string name = lex_name();
      if (name.size() > 2 && name.compare(0, 2, "xi") == 0 &&
          name.find_first_not_of("0123456789", 2) == std::string::npos) {
        unsigned long k = std::stoul(name.substr(2));
        if (k == 0) fail("schema variable indices start at 1");
        tok_.kind = Tok::Var;
        tok_.var = static_cast<unsigned>(k);
        return;
      }
      tok_.kind = Tok::Name;
      tok_.text = std::move(name);
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Constructor constructor_of(const Token& t) {
    if (t.kind == Tok::Pair) return pairs_(t.text, t.second, t.column);
    return names_(t.text, t.column);
  }

  Formula expr(int min_prec) {
    Formula lhs = unary();
    while (tok_.kind == Tok::Name || tok_.kind == Tok::Pair) {
      Token op = tok_;
      Constructor c = constructor_of(op);
      if (c.arity() != 2) fail("'" + describe(op) + "' cannot be used as an infix operator");
      int prec = infix_precedence(base_name(c));
      if (prec < 0) fail("'" + describe(op) + "' has no infix precedence; use prefix application");
      if (prec < min_prec) break;
      advance();
      const bool right_assoc = base_name(c) == "->";
      Formula rhs = expr(right_assoc ? prec : prec + 1);
      lhs = Formula::app(c, {lhs, rhs});
    }
    return lhs;
  }

  Formula unary() {
    Token t = tok_;
    switch (t.kind) {
      case Tok::Var:
        advance();
        if (tok_.kind == Tok::LParen) fail("schema variables take no arguments");
        return Formula::var(t.var);
      case Tok::LParen: {
        advance();
        Formula inner = expr(0);
        if (tok_.kind != Tok::RParen) fail("expected ')'");
        advance();
        return inner;
      }
      case Tok::Name:
      case Tok::Pair: {
        Constructor c = constructor_of(t);
        advance();
        if (tok_.kind == Tok::LParen) {
          if (c.arity() == 0) fail("nullary constructor '" + describe(t) + "' takes no arguments");
          advance();
          std::vector<Formula> args;
          args.push_back(expr(0));
          while (tok_.kind == Tok::Comma) {
            advance();
            args.push_back(expr(0));
          }
          if (tok_.kind != Tok::RParen) fail("expected ',' or ')'");
          if (args.size() != c.arity())
            fail_at("arity mismatch: '" + describe(t) + "' expects " + std::to_string(c.arity()) + " argument(s), got " +
                        std::to_string(args.size()),
                    t.column);
          advance();
          return Formula::app(c, std::move(args));
        }
        if (c.arity() == 0) return Formula::app(c);
        if (c.arity() == 1) return Formula::app(c, {unary()});
        fail_at("constructor '" + describe(t) + "' of arity " + std::to_string(c.arity()) + " needs an argument list",
                t.column);
      }
      case Tok::RParen:
      case Tok::Comma:
      case Tok::End:
        break;
    }
    fail("expected a formula, found '" + describe(t) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_;
  NameResolver names_;
  PairResolver pairs_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) {
  auto names = [&](const std::string& token, std::size_t col) {
    if (auto c = resolve_in(sig, token)) return *c;
    throw SyntaxError("unknown constructor '" + token + "'", col);
  };
  auto pairs = [](const std::string& a, const std::string& b, std::size_t col) -> Constructor {
    throw SyntaxError("paired constructor <" + a + "|" + b + "> outside a combined signature", col);
  };
  return Parser(text, names, pairs).parse_all();
}

Formula parse_formula(std::string_view text, const CombinedSignature& cs) {
  auto names = [&](const std::string& token, std::size_t col) {
    for (const auto& split : name_splits(token)) {
      if (split.tag && !split.tag->empty()) {
        for (int k = 1; k <= 2; ++k) {
          if (*split.tag != cs.component(k).tag()) continue;
          if (auto c = cs.component(k).find(split.name)) return cs.embed_constructor(*c, k);
        }
        continue;
      }
      auto c1 = cs.s1().find(split.name);
      auto c2 = cs.s2().find(split.name);
      if (c1 && c2) return cs.pair(*c1, *c2);
      if (c1) return cs.embed_constructor(*c1, 1);
      if (c2) return cs.embed_constructor(*c2, 2);
    }
    throw SyntaxError("unknown constructor '" + token + "'", col);
  };
  auto pairs = [&](const std::string& a, const std::string& b, std::size_t col) {
    auto c1 = resolve_in(cs.s1(), a);
    if (!c1) throw SyntaxError("unknown first-component constructor '" + a + "'", col);
    auto c2 = resolve_in(cs.s2(), b);
    if (!c2) throw SyntaxError("unknown second-component constructor '" + b + "'", col);
    if (c1->arity() != c2->arity())
      throw SyntaxError("paired constructors differ in arity: <" + a + "|" + b + ">", col);
    return cs.pair(*c1, *c2);
  };
  return Parser(text, names, pairs).parse_all();
}

namespace {

std::string spell(const Constructor& c, const PrintOptions& opts) {
  if (!c.is_pair()) return opts.qualify ? c.spelling() : c.name();
  if (opts.abbreviate) {
    for (int k = 1; k <= 2; ++k)
      if (opts.abbreviate->is_embedded(c, k)) return c.part(k).spelling();
  }
  return c.spelling();
}

void print_into(const Formula& f, const PrintOptions& opts, std::string& out) {
  if (f.is_var()) {
    out += "xi";
    out += std::to_string(f.var_index());
    return;
  }
  out += spell(f.head(), opts);
  if (f.args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < f.args().size(); ++i) {
    if (i) out += ", ";
    print_into(f.arg(i), opts, out);
  }
  out += ')';
}

}  // namespace

std::string print_formula(const Formula& f, const PrintOptions& opts) {
  std::string out;
  print_into(f, opts, out);
  return out;
}

std::string print_rule(const Rule& r, const PrintOptions& opts) {
  std::string out;
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    if (i) out += " ; ";
    out += print_formula(r.premises[i], opts);
  }
  out += r.premises.empty() ? "/ " : " / ";
  out += print_formula(r.conclusion, opts);
  return out;
}

std::string print_rule_file(const Rule& r, const PrintOptions& opts) {
  std::string out;
  for (const auto& p : r.premises) out += print_formula(p, opts) + "\n";
  out += "---\n" + print_formula(r.conclusion, opts) + "\n";
  return out;
}

template <class Sig>
Rule parse_inline_rule(std::string_view text, const Sig& sig, std::string name) {
  auto slash = text.rfind('/');
  if (slash == std::string_view::npos) throw SyntaxError("rule needs '/' before its conclusion", 1);
  std::vector<Formula> premises;
  std::string lhs = trim(text.substr(0, slash));
  if (!lhs.empty())
    for (const auto& piece : split_trim(lhs, ';')) {
      if (piece.empty()) throw SyntaxError("empty premise", 1);
      premises.push_back(parse_formula(piece, sig));
    }
  return make_rule(std::move(name), std::move(premises), parse_formula(trim(text.substr(slash + 1)), sig));
}

template <class Sig>
Rule parse_rule_file(std::string_view text, const Sig& sig, std::string name) {
  std::vector<Formula> premises;
  std::optional<Formula> conclusion;
  bool after_bar = false;
  for (const auto& raw : split_trim(text, '\n')) {
    if (raw.empty() || raw[0] == '#') continue;
    if (raw == "---") {
      if (after_bar) throw SyntaxError("rule file has more than one '---' line", 1);
      after_bar = true;
      continue;
    }
    if (!after_bar) {
      premises.push_back(parse_formula(raw, sig));
    } else {
      if (conclusion) throw SyntaxError("rule file has more than one conclusion", 1);
      conclusion = parse_formula(raw, sig);
    }
  }
  if (!after_bar) throw SyntaxError("rule file lacks the '---' separator", 1);
  if (!conclusion) throw SyntaxError("rule file lacks a conclusion", 1);
  return make_rule(std::move(name), std::move(premises), *conclusion);
}

template Rule parse_inline_rule<Signature>(std::string_view, const Signature&, std::string);
template Rule parse_inline_rule<CombinedSignature>(std::string_view, const CombinedSignature&, std::string);
template Rule parse_rule_file<Signature>(std::string_view, const Signature&, std::string);
template Rule parse_rule_file<CombinedSignature>(std::string_view, const CombinedSignature&, std::string);

}  // namespace meet

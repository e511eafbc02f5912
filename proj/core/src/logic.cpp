#include "meetlogic/logic.hpp"

#include <sstream>

#include "meetlogic/ipl_prover.hpp"
#include "meetlogic/parser.hpp"

namespace meet {

bool LogicBundle::theorem(const Formula& f) const {
  if (verification == Verification::IplProver) return ipl_theorem(f);
  if (matrices.empty()) throw Error("logic " + name + " has no matrices to check theoremhood");
  for (const auto& m : matrices)
    if (!holds(m, f)) return false;
  return true;
}

const IdentityProfile* LogicBundle::identity(const std::string& constructor) const {
  for (const auto& p : identities)
    if (p.constructor == constructor) return &p;
  return nullptr;
}

const Rule* LogicBundle::fixture(const std::string& rule_name) const {
  for (const auto* set : {&admissible_fixtures, &nonadmissible_fixtures})
    for (const auto& r : *set)
      if (r.name == rule_name) return &r;
  return nullptr;
}

namespace {

Formula fold(const Constructor& c, const std::vector<Formula>& xs) {
  Formula acc = xs.at(0);
  for (std::size_t i = 1; i < xs.size(); ++i) acc = Formula::app(c, {acc, xs[i]});
  return acc;
}

Constructor need(const Signature& sig, const char* name) {
  auto c = sig.find(name);
  if (!c) throw Error("signature " + sig.tag() + " lacks '" + name + "' needed by a basis family");
  return *c;
}

struct Sections {
  std::vector<std::pair<std::string, std::vector<std::string>>> items;

  std::vector<const std::vector<std::string>*> all(const std::string& name) const {
    std::vector<const std::vector<std::string>*> out;
    for (const auto& [n, body] : items)
      if (n == name) out.push_back(&body);
    return out;
  }
};

Sections split_sections(std::string_view text) {
  Sections s;
  std::size_t line_no = 0;
  for (const auto& raw : split_trim(text, '\n')) {
    ++line_no;
    if (raw.empty() || raw[0] == '#') continue;
    if (raw.front() == '[' && raw.back() == ']') {
      s.items.push_back({raw.substr(1, raw.size() - 2), {}});
      continue;
    }
    if (s.items.empty()) throw Error("logic definition line " + std::to_string(line_no) + " precedes any section");
    s.items.back().second.push_back(raw);
  }
  return s;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw Error("expected true or false, got '" + v + "'");
}

std::size_t parse_count(const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    throw Error("expected a number, got '" + v + "'");
  return std::stoul(v);
}

Rule named_rule(const std::string& line, const Signature& sig) {
  auto colon = line.find(':');
  if (colon == std::string::npos) throw Error("rule line needs 'NAME:' in front: " + line);
  return parse_inline_rule(line.substr(colon + 1), sig, trim(line.substr(0, colon)));
}

Target parse_target(const std::string& t) {
  if (t == "top") return Target::Top;
  if (t == "bot") return Target::Bot;
  throw Error("completion target must be top or bot, got '" + t + "'");
}

CompletionCase parse_case(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error("completion entry looks like HEAD:top,bot");
  CompletionCase c{spec.substr(0, colon), {}};
  for (const auto& t : split_trim(spec.substr(colon + 1), ',')) c.child_targets.push_back(parse_target(t));
  return c;
}

}  // namespace

std::vector<Rule> visser_rules(const Signature& sig, std::size_t bound) {
  Constructor imp = need(sig, "->"), conj = need(sig, "and"), disj = need(sig, "or");
  std::vector<Rule> out;
  for (unsigned n = 1; n <= bound; ++n) {
    std::vector<Formula> implications;
    for (unsigned i = 1; i <= n; ++i)
      implications.push_back(Formula::app(imp, {Formula::var(i), Formula::var(n + 2 + i)}));
    Formula antecedent = fold(conj, implications);
    Formula last = Formula::var(2 * n + 3);
    Formula premise = Formula::app(
        disj, {Formula::app(imp, {antecedent, Formula::app(disj, {Formula::var(n + 1), Formula::var(n + 2)})}), last});
    std::vector<Formula> disjuncts;
    for (unsigned j = 1; j <= n + 2; ++j) disjuncts.push_back(Formula::app(imp, {antecedent, Formula::var(j)}));
    Formula conclusion = Formula::app(disj, {fold(disj, disjuncts), last});
    out.push_back(make_rule("V" + std::to_string(n), {premise}, conclusion));
  }
  return out;
}

std::vector<Rule> gl_basis_rules(const Signature& sig, std::size_t bound) {
  Constructor imp = need(sig, "->"), conj = need(sig, "and"), disj = need(sig, "or"), box = need(sig, "box");
  auto B = [&](Formula f) { return Formula::app(box, {std::move(f)}); };
  std::vector<Rule> out;
  for (unsigned n = 1; n <= bound; ++n) {
    Formula prime = Formula::var(n + 1), dprime = Formula::var(n + 2);
    std::vector<Formula> boxed;
    for (unsigned i = 1; i <= n; ++i) boxed.push_back(B(Formula::var(i)));
    Formula premise = Formula::app(disj, {B(Formula::app(imp, {B(prime), fold(disj, boxed)})), B(dprime)});
    std::vector<Formula> parts;
    for (unsigned i = 1; i <= n; ++i)
      parts.push_back(B(Formula::app(imp, {Formula::app(conj, {prime, B(prime)}), Formula::var(i)})));
    Formula conclusion = Formula::app(disj, {fold(disj, parts), dprime});
    out.push_back(make_rule("G" + std::to_string(n), {premise}, conclusion));
  }
  return out;
}

LogicBundle parse_logic_definition(std::string_view text, std::size_t basis_bound,
                                   const std::optional<std::string>& tag_override) {
  Sections sections = split_sections(text);
  LogicBundle b;
  std::string tag;
  std::string verification = "matrices";
  for (const auto* body : sections.all("logic")) {
    for (const auto& line : *body) {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw Error("[logic] entries look like key = value: " + line);
      std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
      if (key == "name") b.name = value;
      else if (key == "tag") tag = value;
      else if (key == "structurally_complete") b.structurally_complete = parse_bool(value);
      else if (key == "characteristic") b.characteristic = parse_bool(value);
      else if (key == "citation") b.citation = value;
      else if (key == "verification") verification = value;
      else throw Error("unknown [logic] key '" + key + "'");
    }
  }
  if (b.name.empty()) throw Error("logic definition lacks a name");
  if (tag_override) tag = *tag_override;
  if (tag.empty()) tag = b.name;
  if (verification == "ipl") b.verification = Verification::IplProver;
  else if (verification != "matrices") throw Error("unknown verification method '" + verification + "'");

  std::vector<std::pair<std::string, std::size_t>> ops;
  for (const auto* body : sections.all("signature"))
    for (const auto& line : *body) {
      std::istringstream words(line);
      std::string name, arity;
      words >> name >> arity;
      ops.emplace_back(name, parse_count(arity));
    }
  b.sig = make_signature(tag, ops);

  b.calculus = Calculus(b.name);
  for (const auto* body : sections.all("rules"))
    for (const auto& line : *body) b.calculus.add(named_rule(line, b.sig));

  for (const auto* body : sections.all("matrix")) {
    std::string joined;
    for (const auto& line : *body) joined += line + "\n";
    b.matrices.push_back(parse_matrix(joined, b.sig));
  }
  for (const auto* body : sections.all("generate"))
    for (const auto& line : *body) {
      std::istringstream words(line);
      std::string kind, a, c;
      words >> kind >> a >> c;
      if (kind == "boolean") {
        b.matrices.push_back(boolean_matrix(b.sig));
      } else if (kind == "goedel") {
        b.matrices.push_back(goedel_chain(b.sig, parse_count(a)));
      } else if (kind == "lukasiewicz3") {
        b.matrices.push_back(lukasiewicz3(b.sig));
      } else if (kind == "heyting" && a == "chain") {
        std::size_t n = parse_count(c);
        if (n < 2) throw Error("heyting chains need at least two elements");
        b.matrices.push_back(heyting_upsets("H" + std::to_string(n), b.sig, chain_poset(n - 1)));
      } else if (kind == "heyting" && a == "fork") {
        std::size_t k = parse_count(c);
        b.matrices.push_back(heyting_upsets("F" + std::to_string(k), b.sig, fork_poset(k)));
      } else if (kind == "kripke") {
        FrameClass fc;
        if (a == "S43") fc = FrameClass::S43;
        else if (a == "GL") fc = FrameClass::GL;
        else throw Error("unknown frame class '" + a + "'");
        for (const auto& f : enumerate_frames(fc, parse_count(c))) b.matrices.push_back(kripke_matrix(f, b.sig));
      } else {
        throw Error("unknown [generate] entry '" + line + "'");
      }
    }

  for (const auto* body : sections.all("profiles"))
    for (const auto& line : *body) {
      std::istringstream words(line);
      std::string kind, name;
      words >> kind >> name;
      std::map<std::string, std::string> fields;
      std::string w;
      while (words >> w) {
        auto eq = w.find('=');
        if (eq == std::string::npos) throw Error("profile fields look like key=value: " + line);
        fields[w.substr(0, eq)] = w.substr(eq + 1);
      }
      if (kind == "identity") {
        IdentityProfile p;
        p.constructor = name;
        p.position = parse_count(fields.at("position"));
        p.fillers = split_trim(fields.at("fillers"), ',');
        p.completion_position = parse_count(fields.at("completion"));
        auto c = b.sig.find(name);
        if (!c) throw Error("identity profile names unknown constructor '" + name + "'");
        if (p.fillers.size() != c->arity()) throw Error("identity profile for " + name + " needs one filler per argument");
        b.identities.push_back(std::move(p));
      } else if (kind == "completion" && name == "standard") {
        for (auto& [key, row] : CompletionProfile::standard().cases) b.completion.cases[key] = row;
      } else if (kind == "completion") {
        if (fields.count("top")) b.completion.set(name, Target::Top, parse_case(fields["top"]));
        if (fields.count("bot")) b.completion.set(name, Target::Bot, parse_case(fields["bot"]));
      } else {
        throw Error("unknown [profiles] entry '" + line + "'");
      }
    }

  b.basis_bound = basis_bound;
  for (const auto* body : sections.all("basis"))
    for (const auto& line : *body) {
      if (line.rfind("family", 0) == 0) {
        std::string kind = trim(line.substr(6));
        auto rules = kind == "visser" ? visser_rules(b.sig, basis_bound)
                     : kind == "gl"   ? gl_basis_rules(b.sig, basis_bound)
                                      : throw Error("unknown basis family '" + kind + "'");
        b.basis.insert(b.basis.end(), rules.begin(), rules.end());
      } else {
        b.basis.push_back(named_rule(line, b.sig));
      }
    }

  for (const auto* body : sections.all("fixtures"))
    for (const auto& line : *body) {
      auto space = line.find(' ');
      std::string kind = line.substr(0, space);
      if (space == std::string::npos) throw Error("fixture lines look like 'admissible NAME: ... / ...'");
      Rule r = named_rule(line.substr(space + 1), b.sig);
      if (kind == "admissible") b.admissible_fixtures.push_back(std::move(r));
      else if (kind == "nonadmissible") b.nonadmissible_fixtures.push_back(std::move(r));
      else throw Error("unknown fixture kind '" + kind + "'");
    }

  for (const auto& [name, rows] : sections.items)
    if (name != "logic" && name != "signature" && name != "rules" && name != "matrix" && name != "generate" &&
        name != "profiles" && name != "basis" && name != "fixtures")
      throw Error("unknown section [" + name + "]");
  return b;
}

}  // namespace meet

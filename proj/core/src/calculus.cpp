#include "meetlogic/calculus.hpp"

#include <algorithm>
#include <sstream>

namespace meet {

void Calculus::add(Rule r) {
  if (r.name.empty()) throw Error("calculus rules need names");
  if (index_.count(r.name)) throw Error("calculus " + name_ + " already has a rule named " + r.name);
  index_.emplace(r.name, rules_.size());
  rules_.push_back(std::move(r));
}

void Calculus::add_all(const std::vector<Rule>& rs) {
  for (const auto& r : rs) add(r);
}

const Rule* Calculus::find(std::string_view rule_name) const {
  auto it = index_.find(std::string(rule_name));
  return it == index_.end() ? nullptr : &rules_[it->second];
}

void Calculus::enable_meet_families(std::shared_ptr<const CombinedSignature> cs) {
  if (!cs) throw Error("meet families need a combined signature");
  combined_ = std::move(cs);
}

const Formula& Derivation::conclusion() const {
  if (lines.empty()) throw Error("empty derivation has no conclusion");
  return lines.back().formula;
}

std::size_t Derivation::hyp(Formula f) {
  lines.push_back({std::move(f), Justification{}});
  return lines.size();
}

std::size_t Derivation::apply(Formula f, std::string rule, std::vector<std::size_t> cited, Substitution witness) {
  lines.push_back({std::move(f), Justification{Step::RuleApp, std::move(rule), std::move(cited), std::move(witness), 0}});
  return lines.size();
}

std::size_t Derivation::lift(Formula f, std::size_t first, std::size_t second) {
  lines.push_back({std::move(f), Justification{Step::Lift, "", {first, second}, {}, 0}});
  return lines.size();
}

std::size_t Derivation::colift(Formula f, std::size_t cited, int k) {
  lines.push_back({std::move(f), Justification{Step::CoLift, "", {cited}, {}, k}});
  return lines.size();
}

std::size_t Derivation::falsum(Formula f, std::size_t cited) {
  lines.push_back({std::move(f), Justification{Step::FalsumProp, "", {cited}, {}, 0}});
  return lines.size();
}

namespace {

Verdict reject(std::size_t line, std::string reason) { return Verdict{false, line, std::move(reason)}; }

const Rule* lookup(const Calculus& calc, const std::vector<Rule>& extra, const std::string& name) {
  if (const Rule* r = calc.find(name)) return r;
  for (const auto& r : extra)
    if (r.name == name) return &r;
  return nullptr;
}

Formula shadow(const Formula& f, int k, const CombinedSignature& cs) { return embed(project(f, k), k, cs); }

std::string check_line(const Derivation& d, std::size_t i, const Calculus& calc, const std::vector<Rule>& extra,
                       const std::vector<Formula>& hyps) {
  const DerivationLine& line = d.lines[i - 1];
  const Justification& why = line.why;
  for (std::size_t c : why.cited)
    if (c == 0 || c >= i) return "cites line " + std::to_string(c) + ", which is not an earlier line";
  auto at = [&](std::size_t c) -> const Formula& { return d.lines[c - 1].formula; };

  switch (why.kind) {
    case Step::Hyp:
      if (std::find(hyps.begin(), hyps.end(), line.formula) == hyps.end()) return "not a hypothesis";
      return "";
    case Step::RuleApp: {
      const Rule* r = lookup(calc, extra, why.rule);
      if (!r) return "unknown rule " + why.rule;
      if (why.cited.size() != r->premises.size())
        return "rule " + why.rule + " has " + std::to_string(r->premises.size()) + " premise(s) but " +
               std::to_string(why.cited.size()) + " line(s) are cited";
      for (std::size_t j = 0; j < r->premises.size(); ++j)
        if (apply_substitution(why.witness, r->premises[j]) != at(why.cited[j]))
          return "premise " + std::to_string(j + 1) + " of " + why.rule + " under the witness differs from line " +
                 std::to_string(why.cited[j]);
      if (apply_substitution(why.witness, r->conclusion) != line.formula)
        return "conclusion of " + why.rule + " under the witness differs from the line";
      return "";
    }
    case Step::Lift: {
      if (!calc.meet_families()) return "LFT is not available in this calculus";
      if (why.cited.size() != 2) return "LFT cites exactly two lines";
      const auto& cs = *calc.combined();
      if (line.formula.is_var()) return "LFT conclusion must not be a schema variable";
      if (at(why.cited[0]) != shadow(line.formula, 1, cs)) return "first cited line is not the 1-projection";
      if (at(why.cited[1]) != shadow(line.formula, 2, cs)) return "second cited line is not the 2-projection";
      return "";
    }
    case Step::CoLift: {
      if (!calc.meet_families()) return "cLFT is not available in this calculus";
      if (why.cited.size() != 1) return "cLFT cites exactly one line";
      if (why.component != 1 && why.component != 2) return "cLFT component must be 1 or 2";
      if (line.formula != shadow(at(why.cited[0]), why.component, *calc.combined()))
        return "line is not the " + std::to_string(why.component) + "-projection of line " +
               std::to_string(why.cited[0]);
      return "";
    }
    case Step::FalsumProp: {
      if (!calc.meet_families()) return "FX is not available in this calculus";
      if (why.cited.size() != 1) return "FX cites exactly one line";
      const auto& cs = *calc.combined();
      for (int k = 1; k <= 2; ++k)
        if (at(why.cited[0]) == cs.falsum_of(k) && line.formula == cs.falsum_of(3 - k)) return "";
      return "FX must take one component's falsum to the other's";
    }
  }
  return "unknown justification";
}

}  // namespace

Verdict check_derivation(const Derivation& d, const Calculus& calc, const std::vector<Rule>& extra,
                         const std::vector<Formula>& hyps) {
  if (d.empty()) return reject(0, "empty derivation");
  for (std::size_t i = 1; i <= d.size(); ++i) {
    std::string problem;
    try {
      problem = check_line(d, i, calc, extra, hyps);
    } catch (const Error& e) {
      problem = e.what();
    }
    if (!problem.empty()) return reject(i, problem);
  }
  return Verdict{true, 0, ""};
}

std::string inherited_rule_name(const std::string& name, int k) { return std::to_string(k) + ":" + name; }

TaggedRuleSet inherit_rules(const std::vector<Rule>& rules, int k, const CombinedSignature& cs) {
  const auto& sig = cs.component(k);
  std::vector<Rule> embedded;
  for (const auto& r : rules) {
    for (const auto& p : r.premises) sig.require_well_formed(p);
    sig.require_well_formed(r.conclusion);
    Rule e = embed(r, k, cs);
    e.name = inherited_rule_name(r.name, k);
    embedded.push_back(std::move(e));
  }
  return tag_ruleset(embedded, cs.embedded(k), k);
}

Calculus assemble_meet_calculus(const Calculus& c1, const Calculus& c2, std::shared_ptr<const CombinedSignature> cs) {
  if (!cs) throw Error("assembling a meet calculus needs a combined signature");
  Calculus out("meet(" + c1.name() + "," + c2.name() + ")");
  const Calculus* parts[2] = {&c1, &c2};
  for (int k = 1; k <= 2; ++k)
    for (auto& t : inherit_rules(parts[k - 1]->rules(), k, *cs)) out.add(std::move(t.rule));
  out.enable_meet_families(std::move(cs));
  return out;
}

// ---------------------------------------------------------------------------

std::string print_substitution(const Substitution& s, const PrintOptions& opts) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, img] : s) {
    if (!first) out += "; ";
    first = false;
    out += std::to_string(v) + " := " + print_formula(img, opts);
  }
  return out + "}";
}

namespace {

std::string join_numbers(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<std::size_t> parse_numbers(const std::string& text, std::size_t line_no) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  for (const auto& piece : split_trim(text, ',')) {
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
      throw Error("derivation line " + std::to_string(line_no) + ": bad line number '" + piece + "'");
    out.push_back(std::stoul(piece));
  }
  return out;
}

}  // namespace

std::string print_derivation(const Derivation& d, const PrintOptions& opts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& line = d.lines[i];
    out << (i + 1) << ". " << print_formula(line.formula, opts) << " ; ";
    const auto& why = line.why;
    switch (why.kind) {
      case Step::Hyp: out << "HYP"; break;
      case Step::RuleApp:
        out << "RULE " << why.rule << " sigma=" << print_substitution(why.witness, opts);
        out << " lines=" << join_numbers(why.cited);
        break;
      case Step::Lift: out << "LFT lines=" << join_numbers(why.cited); break;
      case Step::CoLift: out << "CLFT line=" << join_numbers(why.cited) << " k=" << why.component; break;
      case Step::FalsumProp: out << "FX line=" << join_numbers(why.cited); break;
    }
    out << "\n";
  }
  return out.str();
}

template <class Sig>
Derivation parse_derivation(std::string_view text, const Sig& sig) {
  Derivation d;
  std::size_t physical = 0;
  for (const auto& raw : split_trim(text, '\n')) {
    ++physical;
    if (raw.empty() || raw[0] == '#') continue;
    auto where = [&](const std::string& what) {
      return Error("derivation text line " + std::to_string(physical) + ": " + what);
    };
    auto dot = raw.find('.');
    if (dot == std::string::npos || raw.substr(0, dot).find_first_not_of("0123456789") != std::string::npos ||
        dot == 0)
      throw where("expected 'N. formula ; justification'");
    if (std::stoul(raw.substr(0, dot)) != d.size() + 1) throw where("line numbers must be consecutive from 1");
    auto semi = raw.find(';', dot);
    if (semi == std::string::npos) throw where("missing ';' before the justification");
    Formula f = parse_formula(trim(raw.substr(dot + 1, semi - dot - 1)), sig);
    std::string rest = trim(raw.substr(semi + 1));

    std::string sigma_text;
    if (auto s = rest.find("sigma={"); s != std::string::npos) {
      auto close = rest.find('}', s);
      if (close == std::string::npos) throw where("unterminated sigma={...}");
      sigma_text = rest.substr(s + 7, close - s - 7);
      rest = trim(rest.substr(0, s) + " " + rest.substr(close + 1));
    } else if (auto u = rest.find("\xcf\x83={"); u != std::string::npos) {
      auto close = rest.find('}', u);
      if (close == std::string::npos) throw where("unterminated sigma={...}");
      sigma_text = rest.substr(u + 4, close - u - 4);
      rest = trim(rest.substr(0, u) + " " + rest.substr(close + 1));
    }

    std::istringstream words(rest);
    std::string kind;
    words >> kind;
    Justification why;
    std::map<std::string, std::string> fields;
    std::string word;
    std::vector<std::string> loose;
    while (words >> word) {
      auto eq = word.find('=');
      if (eq == std::string::npos) loose.push_back(word);
      else fields[word.substr(0, eq)] = word.substr(eq + 1);
    }
    auto field = [&](const std::string& key) {
      auto it = fields.find(key);
      if (it == fields.end()) throw where("missing " + key + "=");
      return it->second;
    };
    if (kind == "HYP") {
      why.kind = Step::Hyp;
    } else if (kind == "RULE") {
      why.kind = Step::RuleApp;
      if (loose.size() != 1) throw where("RULE needs exactly one rule name");
      why.rule = loose[0];
      why.cited = fields.count("lines") ? parse_numbers(fields["lines"], physical) : std::vector<std::size_t>{};
      if (!trim(sigma_text).empty()) {
        for (const auto& entry : split_trim(sigma_text, ';')) {
          auto assign = entry.find(":=");
          if (assign == std::string::npos) throw where("substitution entries look like 'k := formula'");
          std::string var = trim(entry.substr(0, assign));
          if (var.rfind("xi", 0) == 0) var = var.substr(2);
          if (var.empty() || var.find_first_not_of("0123456789") != std::string::npos)
            throw where("bad substitution variable '" + var + "'");
          why.witness.bind(static_cast<unsigned>(std::stoul(var)), parse_formula(trim(entry.substr(assign + 2)), sig));
        }
      }
    } else if (kind == "LFT") {
      why.kind = Step::Lift;
      why.cited = parse_numbers(field("lines"), physical);
    } else if (kind == "CLFT") {
      why.kind = Step::CoLift;
      why.cited = parse_numbers(field("line"), physical);
      why.component = std::stoi(field("k"));
    } else if (kind == "FX") {
      why.kind = Step::FalsumProp;
      why.cited = parse_numbers(field("line"), physical);
    } else {
      throw where("unknown justification '" + kind + "'");
    }
    d.lines.push_back({std::move(f), std::move(why)});
  }
  return d;
}

template Derivation parse_derivation<Signature>(std::string_view, const Signature&);
template Derivation parse_derivation<CombinedSignature>(std::string_view, const CombinedSignature&);

}  // namespace meet

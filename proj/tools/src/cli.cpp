#include "meetlogic_cli/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <regex>
#include <sstream>

#include "meetlogic/admissibility.hpp"
#include "meetlogic/meet.hpp"
#include "meetlogic/parser.hpp"
#include "meetlogic/templates.hpp"

namespace meet::cli {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string l1, l2, calc, logic, format = "text";
  unsigned depth = 4;
  std::size_t nodes = 200000;
  std::size_t basis_n = 3;
  std::size_t max_carrier = 256;
  int k = 0;
  std::vector<std::string> positional, hyps;
  std::string goal, rule_file, rule_text, o1, o2, target = "bot", root_head, c1 = "and", c2 = "->", assign;
  std::string over = "embedded";
  bool with_basis = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LogicBundle load_bundle(const std::string& name, std::size_t bound, const std::optional<std::string>& tag) {
  for (const auto& p : preset_names())
    if (p == name) return load_preset(name, bound, tag);
  if (std::filesystem::exists(name)) return parse_logic_definition(slurp(name), bound, tag);
  throw UsageError("'" + name + "' is neither a preset nor a logic definition file");
}

/// The logics an invocation works over: one bundle or a meet system.
struct Context {
  std::optional<LogicBundle> single;
  std::optional<MeetSystem> meet;

  bool combined() const { return meet.has_value(); }
  const LogicBundle& logic() const {
    if (!single) throw UsageError("this verb needs a single logic (--logic)");
    return *single;
  }
  const MeetSystem& system() const {
    if (!meet) throw UsageError("this verb needs two logics (--l1/--l2 or --calc meet(A,B))");
    return *meet;
  }
  Formula parse(const std::string& text) const {
    return combined() ? parse_formula(text, *meet->cs) : parse_formula(text, single->sig);
  }
  Rule parse_rule(const std::string& text, bool file) const {
    if (combined()) return file ? parse_rule_file(text, *meet->cs) : parse_inline_rule(text, *meet->cs);
    return file ? parse_rule_file(text, single->sig) : parse_inline_rule(text, single->sig);
  }
  PrintOptions print_options() const {
    PrintOptions o;
    if (combined()) o.abbreviate = meet->cs.get();
    return o;
  }
  std::string show(const Formula& f) const { return print_formula(f, print_options()); }
  std::string show(const Rule& r) const { return print_rule(r, print_options()); }
};

/// Guesses a preset from `.TAG` qualifiers in the inputs; CPL otherwise.
std::string infer_logic(const std::vector<std::string>& texts) {
  static const std::regex qualifier(R"(\.([A-Za-z][A-Za-z0-9]*))");
  for (const auto& t : texts)
    for (std::sregex_iterator it(t.begin(), t.end(), qualifier), end; it != end; ++it)
      for (const auto& p : preset_names())
        if ((*it)[1] == p) return p;
  return "CPL";
}

Context make_context(Options o, bool infer = false) {
  if (!o.calc.empty()) {
    static const std::regex pair(R"(^\s*meet\(\s*([^,\s]+)\s*,\s*([^)\s]+)\s*\)\s*$)");
    std::smatch m;
    if (std::regex_match(o.calc, m, pair)) {
      o.l1 = m[1];
      o.l2 = m[2];
    } else {
      o.logic = o.calc;
    }
  }
  Context c;
  if (!o.l1.empty() && !o.l2.empty()) {
    if (o.l1 == o.l2)
      c.meet = make_meet_system(load_bundle(o.l1, o.basis_n, o.l1 + "1"), load_bundle(o.l2, o.basis_n, o.l2 + "2"));
    else
      c.meet = make_meet_system(load_bundle(o.l1, o.basis_n, std::nullopt), load_bundle(o.l2, o.basis_n, std::nullopt));
    return c;
  }
  std::string name = !o.logic.empty() ? o.logic : o.l1;
  if (name.empty()) {
    if (!infer) throw UsageError("choose logics with --logic, --l1/--l2 or --calc");
    name = infer_logic(o.positional);
  }
  c.single = load_bundle(name, o.basis_n, std::nullopt);
  return c;
}

SearchBounds bounds_of(const Options& o) {
  SearchBounds b;
  b.max_depth = o.depth;
  b.max_nodes = o.nodes;
  return b;
}

Rule rule_input(const Context& c, const Options& o) {
  if (!o.rule_text.empty()) return c.parse_rule(o.rule_text, false);
  if (!o.rule_file.empty()) return c.parse_rule(slurp(o.rule_file), true);
  throw UsageError("give the rule with --rule FILE or --rule-text TEXT");
}

const std::string& positional(const Options& o, std::size_t i, const char* what) {
  if (o.positional.size() <= i) throw UsageError(std::string("missing argument: ") + what);
  return o.positional[i];
}

/// Collects the verdict record and the human transcript; prints one of them.
struct Report {
  json record = json::object();
  std::vector<std::string> lines;

  void line(std::string s) { lines.push_back(std::move(s)); }
  int finish(const Options& o, std::ostream& out, int code) {
    record["exit"] = code;
    if (o.format == "structured") {
      out << record.dump() << "\n";
    } else {
      for (const auto& l : lines) out << l << "\n";
    }
    return code;
  }
};

std::vector<Rule> basis_rules(const Context& c) {
  if (!c.combined()) return c.logic().basis;
  const auto& m = c.system();
  return rules_of(combined_basis(m.l1.basis, m.l2.basis, *m.cs));
}

const Calculus& calculus_of(const Context& c) { return c.combined() ? c.system().calculus : c.logic().calculus; }

std::vector<Matrix> matrices_of(const Context& c, const Options& o) {
  if (c.combined()) return c.system().product_matrices(o.max_carrier);
  return c.logic().matrices;
}

std::string show_assignment(const Assignment& a) {
  std::string s = "{";
  for (const auto& [v, x] : a) s += (s.size() > 1 ? ", xi" : "xi") + std::to_string(v) + "=" + std::to_string(x);
  return s + "}";
}

// ---------------------------------------------------------------------------
// Verbs

int verb_combine(const Options& o, std::ostream& out) {
  Context c = make_context(o);
  const auto& m = c.system();
  Report r;
  json arities = json::object();
  for (std::size_t n : m.cs->combined().arities()) arities[std::to_string(n)] = m.cs->combined().constructors(n).size();
  r.record = {{"verb", "combine"},
              {"components", {m.l1.sig.tag(), m.l2.sig.tag()}},
              {"constructors", arities},
              {"rule_count", m.calculus.rules().size()}};
  r.line("components: " + m.l1.sig.tag() + ", " + m.l2.sig.tag());
  for (auto& [n, count] : arities.items()) r.line("arity " + n + ": " + std::to_string(count.get<std::size_t>()) + " pairs");
  r.line("calculus " + m.calculus.name() + ": " + std::to_string(m.calculus.rules().size()) + " rules plus LFT, cLFT, FX");
  json rules = json::array();
  for (const auto& rule : m.calculus.rules()) {
    rules.push_back(rule.name);
    r.line("  " + rule.name + ": " + c.show(rule));
  }
  r.record["rules"] = rules;
  return r.finish(o, out, kAffirm);
}

int verb_project(const Options& o, std::ostream& out) {
  Context c = make_context(o);
  c.system();
  Formula f = c.parse(positional(o, 0, "FORMULA"));
  Report r;
  r.record = {{"verb", "project"}, {"input", c.show(f)}};
  for (int k = 1; k <= 2; ++k) {
    if (o.k && o.k != k) continue;
    std::string p = print_formula(project(f, k));
    r.record["projection" + std::to_string(k)] = p;
    r.line("|" + std::to_string(k) + ": " + p);
  }
  return r.finish(o, out, kAffirm);
}

int verb_embed(const Options& o, std::ostream& out) {
  Context c = make_context(o);
  const auto& m = c.system();
  int k = o.k ? o.k : 1;
  Formula f = parse_formula(positional(o, 0, "FORMULA"), m.cs->component(k));
  Formula e = embed(f, k, *m.cs);
  Report r;
  r.record = {{"verb", "embed"}, {"k", k}, {"input", print_formula(f)}, {"embedded", print_formula(e)}};
  r.line(print_formula(e));
  return r.finish(o, out, kAffirm);
}

int verb_tag(const Options& o, std::ostream& out) {
  Context c = make_context(o);
  const auto& m = c.system();
  int k = o.k ? o.k : 1;
  Rule rule = !o.rule_text.empty() ? parse_inline_rule(o.rule_text, m.cs->component(k), "r")
                                   : parse_rule_file(slurp(positional(o, 0, "RULE FILE")), m.cs->component(k), "r");
  Rule e = embed(rule, k, *m.cs);
  e.name = inherited_rule_name("r", k);
  std::vector<Constructor> tags;
  if (o.over == "all") tags = m.cs->combined().all();
  else if (o.over == "embedded") tags = m.cs->embedded(k);
  else throw UsageError("--over takes 'embedded' or 'all'");
  auto tagged = tag_rule(e, tags, k);
  Report r;
  json rules = json::array();
  for (const auto& t : tagged) {
    rules.push_back({{"name", t.rule.name}, {"rule", c.show(t.rule)}});
    r.line(t.rule.name + ": " + c.show(t.rule));
  }
  r.record = {{"verb", "tag"}, {"liberal", rule.liberal()}, {"count", tagged.size()}, {"rules", rules}};
  r.line(std::to_string(tagged.size()) + " rule(s)");
  return r.finish(o, out, kAffirm);
}

int verb_check(const Options& o, std::ostream& out) {
  Context c = make_context(o);
  std::string text = slurp(positional(o, 0, "DERIVATION FILE"));
  Derivation d = c.combined() ? parse_derivation(text, *c.system().cs) : parse_derivation(text, c.logic().sig);
  std::vector<Formula> hyps;
  if (!o.hyps.empty()) {
    for (const auto& h : o.hyps) hyps.push_back(c.parse(h));
  } else {
    for (const auto& l : d.lines)
      if (l.why.kind == Step::Hyp) hyps.push_back(l.formula);
  }
  std::vector<Rule> extra = o.with_basis ? basis_rules(c) : std::vector<Rule>{};
  auto v = check_derivation(d, calculus_of(c), extra, hyps);
  Report r;
  r.record = {{"verb", "check-derivation"}, {"accepted", v.accepted}, {"lines", d.lines.size()}};
  if (v.accepted) {
    r.line("accepted: " + std::to_string(d.lines.size()) + " lines, conclusion " + c.show(d.conclusion()));
  } else {
    r.record["line"] = v.line;
    r.record["reason"] = v.reason;
    r.line("rejected at line " + std::to_string(v.line) + ": " + v.reason);
  }
  return r.finish(o, out, v.accepted ? kAffirm : kNegative);
}

int verb_search(const Options& o, std::ostream& out) {
  Context c = make_context(o);
  if (o.goal.empty()) throw UsageError("search needs --goal");
  Formula goal = c.parse(o.goal);
  std::vector<Formula> hyps;
  for (const auto& h : o.hyps) hyps.push_back(c.parse(h));
  std::vector<Rule> extra = o.with_basis ? basis_rules(c) : std::vector<Rule>{};
  SearchStats stats;
  auto d = bounded_proof_search(calculus_of(c), extra, hyps, goal, bounds_of(o), &stats);
  Report r;
  r.record = {{"verb", "search"}, {"found", d.has_value()}, {"nodes", stats.nodes}, {"budget_exhausted", stats.exhausted_budget}};
  if (d) {
    std::string text = print_derivation(*d, c.print_options());
    r.record["derivation"] = text;
    r.line(text.substr(0, text.size() - (text.empty() ? 0 : 1)));
  } else {
    r.line("not found within depth " + std::to_string(o.depth) + " (" + std::to_string(stats.nodes) + " nodes)");
  }
  return r.finish(o, out, d ? kAffirm : kInconclusive);
}

AdmissibilityOracle oracle_for(const std::string& table, const LogicBundle& logic) {
  if (table.empty()) return bundle_oracle(logic);
  return table_oracle(slurp(table), logic.sig, logic.sig.tag());
}

int verb_decide(const Options& o, std::ostream& out) {
  Context c = make_context(o);
  Rule rule = rule_input(c, o);
  Report r;
  r.record = {{"verb", "decide-admissible"}, {"rule", c.show(rule)}};
  if (!c.combined()) {
    auto res = brute_force_admissible(c.logic(), rule.premises, rule.conclusion);
    r.record["verdict"] = to_string(res.verdict);
    std::string line = to_string(res.verdict);
    if (res.witness) {
      r.record["witness"] = print_substitution(*res.witness);
      line += " witness " + print_substitution(*res.witness);
    }
    r.line(line);
    int code = res.verdict == Admissibility::Admissible      ? kAffirm
               : res.verdict == Admissibility::NotAdmissible ? kNegative
                                                            : kInconclusive;
    return r.finish(o, out, code);
  }
  const auto& m = c.system();
  auto o1 = oracle_for(o.o1, m.l1);
  auto o2 = oracle_for(o.o2, m.l2);
  MeetDecision d = decide_admissible_meet(o1, o2, rule.premises, rule.conclusion, *m.cs);
  r.record["a1"] = d.a1;
  r.record["a2"] = d.a2;
  if (d.fallback) r.record["fallback"] = *d.fallback;
  r.record["admissible"] = d.admissible;
  r.record["exact"] = d.exact;
  r.record["calls"] = d.calls;
  r.record["report"] = d.report();
  r.line(d.report());
  int code = !d.admissible ? kNegative : d.exact ? kAffirm : kInconclusive;
  return r.finish(o, out, code);
}

int verb_basis(const Options& o, std::ostream& out) {
  Context c = make_context(o);
  Report r;
  json rules = json::array();
  if (c.combined()) {
    const auto& m = c.system();
    auto set = combined_basis(m.l1.basis, m.l2.basis, *m.cs);
    for (const auto& t : set) {
      rules.push_back({{"name", t.rule.name},
                       {"side", t.side},
                       {"source", t.source},
                       {"liberal", t.rule.liberal()},
                       {"tagged", t.tag.valid()},
                       {"rule", c.show(t.rule)}});
      r.line(t.rule.name + ": " + c.show(t.rule));
    }
  } else {
    for (const auto& b : c.logic().basis) {
      rules.push_back({{"name", b.name}, {"side", 0}, {"source", b.name}, {"liberal", b.liberal()}, {"tagged", false},
                       {"rule", c.show(b)}});
      r.line(b.name + ": " + c.show(b));
    }
  }
  r.record = {{"verb", "basis"}, {"count", rules.size()}, {"rules", rules}};
  r.line(std::to_string(rules.size()) + " rule(s)");
  return r.finish(o, out, kAffirm);
}

Assignment parse_assignment(const std::string& text) {
  Assignment a;
  for (const auto& part : split_trim(text, ',')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("assignments look like 1=0,2=1");
    std::string var = trim(part.substr(0, eq));
    if (var.rfind("xi", 0) == 0) var = var.substr(2);
    a[static_cast<unsigned>(std::stoul(var))] = static_cast<unsigned>(std::stoul(part.substr(eq + 1)));
  }
  return a;
}

int verb_eval(const Options& o, std::ostream& out) {
  Context c = make_context(o);
  Formula f = c.parse(positional(o, 0, "FORMULA"));
  auto ms = matrices_of(c, o);
  Report r;
  json per = json::array();
  bool all = true;
  for (const auto& mtx : ms) {
    if (!o.assign.empty()) {
      unsigned v = eval(mtx, parse_assignment(o.assign), f);
      bool des = mtx.designated(v);
      all = all && des;
      per.push_back({{"matrix", mtx.name()}, {"value", v}, {"designated", des}});
      r.line(mtx.name() + ": " + std::to_string(v) + (des ? " (designated)" : ""));
    } else {
      bool h = holds(mtx, f);
      all = all && h;
      per.push_back({{"matrix", mtx.name()}, {"holds", h}});
      r.line(mtx.name() + ": " + (h ? "holds" : "fails"));
    }
  }
  r.record = {{"verb", "eval"}, {"formula", c.show(f)}, {"matrices", per}, {"all", all}};
  return r.finish(o, out, all ? kAffirm : kNegative);
}

int verb_entails(const Options& o, std::ostream& out) {
  Context c = make_context(o);
  if (o.goal.empty()) throw UsageError("entails needs --goal");
  Formula goal = c.parse(o.goal);
  std::vector<Formula> hyps;
  for (const auto& h : o.hyps) hyps.push_back(c.parse(h));
  auto ms = matrices_of(c, o);
  auto cm = find_countermodel(ms, hyps, goal);
  Report r;
  r.record = {{"verb", "entails"}, {"entails", !cm}, {"matrices", ms.size()}};
  if (cm) {
    r.record["countermodel"] = {{"matrix", ms[cm->matrix].name()}, {"assignment", show_assignment(cm->assignment)}};
    r.line("no: countermodel in " + ms[cm->matrix].name() + " " + show_assignment(cm->assignment));
  } else {
    r.line("yes (" + std::to_string(ms.size()) + " matrices)");
  }
  return r.finish(o, out, cm ? kNegative : kAffirm);
}

int verb_trees(const Options& o, std::ostream& out) {
  Context c = make_context(o, true);
  Formula f1 = c.parse(positional(o, 0, "FORMULA1"));
  Formula f2 = c.parse(positional(o, 1, "FORMULA2"));
  auto t1 = decomposition_tree(f1), t2 = decomposition_tree(f2);
  bool forward = find_embedding(t1, t2).has_value(), backward = find_embedding(t2, t1).has_value();
  bool equiv = forward && backward;
  Report r;
  r.record = {{"verb", "trees"},
              {"equivalent", equiv},
              {"embeds_1_in_2", forward},
              {"embeds_2_in_1", backward},
              {"shape1", shape_key(f1)},
              {"shape2", shape_key(f2)}};
  r.line(std::string(equiv ? "equivalent" : "not equivalent") + ": " + shape_key(f1) + " vs " + shape_key(f2));
  return r.finish(o, out, equiv ? kAffirm : kNegative);
}

Formula iff_of(const LogicBundle& l, const Formula& a, const Formula& b) {
  auto iff = l.sig.find("iff");
  if (!iff) throw UsageError("logic " + l.name + " has no iff");
  return Formula::app(*iff, {a, b});
}

int verb_complete(const Options& o, std::ostream& out) {
  Context c = make_context(o, true);
  const auto& l = c.logic();
  Formula psi = c.parse(positional(o, 0, "FORMULA"));
  Target t;
  if (o.target == "top") t = Target::Top;
  else if (o.target == "bot") t = Target::Bot;
  else throw UsageError("--target takes top or bot");
  std::optional<std::string> head;
  if (!o.root_head.empty()) head = o.root_head;
  Formula delta = completion_formula(psi, t, l.sig, l.completion, head);
  bool shape = trees_equiv(delta, psi);
  Formula goal = iff_of(l, t == Target::Top ? l.sig.top() : l.sig.bot(), delta);
  bool thm = l.theorem(goal);
  Report r;
  r.record = {{"verb", "complete"},
              {"input", c.show(psi)},
              {"completion", c.show(delta)},
              {"trees_equivalent", shape},
              {"theorem", thm},
              {"exact", l.theorem_exact()}};
  r.line(c.show(delta));
  r.line(std::string("trees ") + (shape ? "equivalent" : "differ") + "; " + c.show(goal) + (thm ? " holds" : " fails"));
  int code = !(shape && thm) ? kNegative : l.theorem_exact() ? kAffirm : kInconclusive;
  return r.finish(o, out, code);
}

int verb_equalize(const Options& o, std::ostream& out) {
  if (o.l1.empty() || o.l2.empty()) throw UsageError("equalize needs --l1 and --l2");
  LogicBundle a = load_bundle(o.l1, o.basis_n, o.l1 == o.l2 ? std::optional<std::string>(o.l1 + "1") : std::nullopt);
  LogicBundle b = load_bundle(o.l2, o.basis_n, o.l1 == o.l2 ? std::optional<std::string>(o.l2 + "2") : std::nullopt);
  Formula f1 = parse_formula(positional(o, 0, "FORMULA1"), a.sig);
  Formula f2 = parse_formula(positional(o, 1, "FORMULA2"), b.sig);
  const IdentityProfile* p1 = a.identity(o.c1);
  const IdentityProfile* p2 = b.identity(o.c2);
  if (!p1 || !p2) throw UsageError("no identity profile for --c1 " + o.c1 + " / --c2 " + o.c2);
  auto eq = equalize_pair(f1, a.sig, *p1, a.completion, f2, b.sig, *p2, b.completion);
  bool trees = trees_equiv(eq.first, eq.second);
  bool e1 = a.theorem(iff_of(a, f1, eq.first)), e2 = b.theorem(iff_of(b, f2, eq.second));
  Report r;
  r.record = {{"verb", "equalize"}, {"first", print_formula(eq.first)}, {"second", print_formula(eq.second)},
              {"trees_equivalent", trees}, {"equivalent1", e1}, {"equivalent2", e2}};
  r.line(print_formula(eq.first));
  r.line(print_formula(eq.second));
  r.line(std::string("trees ") + (trees ? "equivalent" : "differ") + "; equivalences " + (e1 && e2 ? "hold" : "fail"));
  return r.finish(o, out, trees && e1 && e2 ? kAffirm : kNegative);
}

int verb_audit(const Options& o, std::ostream& out) {
  Context c = make_context(o);
  auto ms = matrices_of(c, o);
  if (ms.empty()) throw UsageError("no matrices to audit against (raise --max-carrier?)");
  Report r;
  json bad = json::array();
  std::size_t checked = 0;
  for (const auto& rule : calculus_of(c).rules()) {
    ++checked;
    if (!check_rule_soundness(ms, rule)) {
      bad.push_back(rule.name);
      r.line("unsound: " + rule.name + ": " + c.show(rule));
    }
  }
  r.record = {{"verb", "soundness-audit"}, {"rules", checked}, {"matrices", ms.size()}, {"unsound", bad}};
  r.line(std::to_string(checked) + " rules checked against " + std::to_string(ms.size()) + " matrices, " +
         std::to_string(bad.size()) + " unsound");
  return r.finish(o, out, bad.empty() ? kAffirm : kNegative);
}

int verb_template(const Options& o, std::ostream& out) {
  Context c = make_context(o);
  const auto& m = c.system();
  Rule rule = rule_input(c, o);
  SearchBounds b = bounds_of(o);
  b.liftable = true;
  std::vector<Formula> proj[2];
  for (const auto& p : rule.premises) {
    proj[0].push_back(project(p, 1));
    proj[1].push_back(project(p, 2));
  }
  auto component = [&](int k, const Formula& goal) -> std::optional<ComponentProof> {
    const auto& l = m.logic(k);
    std::vector<Rule> extra = o.with_basis ? l.basis : std::vector<Rule>{};
    auto d = bounded_proof_search(l.calculus, extra, proj[k - 1], goal, b);
    if (!d) return std::nullopt;
    return ComponentProof{*d, &l.calculus, extra};
  };
  std::optional<Derivation> out_d;
  std::string kind;
  auto d1 = component(1, project(rule.conclusion, 1));
  auto d2 = component(2, project(rule.conclusion, 2));
  if (d1 && d2) {
    out_d = build_both_admissible_derivation(rule.premises, rule.conclusion, *d1, *d2, *m.cs);
    kind = "both";
  } else {
    for (int j = 1; j <= 2 && !out_d; ++j) {
      auto df = component(j, m.cs->component(j).bot());
      if (!df) continue;
      int k = 3 - j;
      auto ej = ex_falso_continuation(m.logic(j).calculus, m.cs->component(j), project(rule.conclusion, j));
      auto ek = ex_falso_continuation(m.logic(k).calculus, m.cs->component(k), project(rule.conclusion, k));
      out_d = build_vacuous_side_derivation(rule.premises, rule.conclusion, j, *df, ej, ek, *m.cs);
      kind = "vacuous" + std::to_string(j);
    }
  }
  Report r;
  r.record = {{"verb", "template"}, {"found", out_d.has_value()}};
  if (!out_d) {
    r.line("no component derivations found within bounds");
    return r.finish(o, out, kInconclusive);
  }
  std::string text = print_derivation(*out_d);
  r.record["kind"] = kind;
  r.record["derivation"] = text;
  r.line(text.substr(0, text.size() - (text.empty() ? 0 : 1)));
  return r.finish(o, out, kAffirm);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"meetlogic: meet-combination of matrix logics", "meetlogic"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub, bool positional_args = true) {
    sub->add_option("--l1", o.l1, "First logic: preset name or definition file");
    sub->add_option("--l2", o.l2, "Second logic: preset name or definition file");
    sub->add_option("--calc", o.calc, "meet(A,B) or a single logic");
    sub->add_option("--logic", o.logic, "Single logic: preset name or definition file");
    sub->add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--depth", o.depth, "Search depth bound")->check(CLI::PositiveNumber);
    sub->add_option("--nodes", o.nodes, "Search node budget")->check(CLI::PositiveNumber);
    sub->add_option("--basis-n", o.basis_n, "Instantiation bound for basis families")->check(CLI::PositiveNumber);
    sub->add_option("--max-carrier", o.max_carrier, "Largest product matrix carrier")->check(CLI::PositiveNumber);
    if (positional_args) sub->add_option("args", o.positional, "Formulas or files");
  };

  std::map<std::string, std::function<int(const Options&, std::ostream&)>> verbs{
      {"combine", verb_combine},   {"project", verb_project},  {"embed", verb_embed},
      {"tag", verb_tag},           {"check-derivation", verb_check}, {"search", verb_search},
      {"decide-admissible", verb_decide}, {"basis", verb_basis},  {"eval", verb_eval},
      {"entails", verb_entails},   {"trees", verb_trees},      {"complete", verb_complete},
      {"equalize", verb_equalize}, {"soundness-audit", verb_audit}, {"template", verb_template}};
  const std::map<std::string, std::string> help{
      {"combine", "Print the combined signature and calculus"},
      {"project", "Project a combined formula onto its components"},
      {"embed", "Embed a component formula (--k)"},
      {"tag", "Embed and tag a component rule"},
      {"check-derivation", "Check a derivation file"},
      {"search", "Bounded proof search"},
      {"decide-admissible", "Admissibility in the combination from component oracles"},
      {"basis", "Emit the (combined) basis for admissible rules"},
      {"eval", "Evaluate a formula in the matrices"},
      {"entails", "Matrix entailment"},
      {"trees", "Decomposition-tree equivalence of two formulas"},
      {"complete", "Build a completion formula"},
      {"equalize", "Equalize two formulas of similar logics"},
      {"soundness-audit", "Check every calculus rule against the matrices"},
      {"template", "Build a combined derivation from component proofs"}};

  for (const auto& [name, _] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    common(sub);
    if (name == "project" || name == "embed" || name == "tag" || name == "template")
      sub->add_option("--k", o.k, "Component (1 or 2)")->check(CLI::Range(1, 2));
    if (name == "tag") sub->add_option("--over", o.over, "Tag over 'embedded' (default) or 'all' constructors");
    if (name == "tag" || name == "decide-admissible" || name == "template") {
      sub->add_option("--rule", o.rule_file, "Rule file (premises, ---, conclusion)");
      sub->add_option("--rule-text", o.rule_text, "Inline rule p1 ; p2 / c");
    }
    if (name == "search" || name == "entails" || name == "check-derivation") {
      sub->add_option("--hyp", o.hyps, "Hypothesis (repeatable)");
    }
    if (name == "search" || name == "entails") sub->add_option("--goal", o.goal, "Goal formula");
    if (name == "search" || name == "check-derivation" || name == "template")
      sub->add_flag("--with-basis", o.with_basis, "Allow the basis rules");
    if (name == "decide-admissible") {
      sub->add_option("--o1", o.o1, "Oracle table for the first logic");
      sub->add_option("--o2", o.o2, "Oracle table for the second logic");
    }
    if (name == "eval") sub->add_option("--assign", o.assign, "Assignment such as 1=0,2=1");
    if (name == "complete") {
      sub->add_option("--target", o.target, "top or bot");
      sub->add_option("--root-head", o.root_head, "Replacement head at the root");
    }
    if (name == "equalize") {
      sub->add_option("--c1", o.c1, "Constructor with identities in the first logic");
      sub->add_option("--c2", o.c2, "Constructor with identities in the second logic");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kAffirm : kUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    return verbs.at(verb)(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage + 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage + 1;
  }
}

}  // namespace meet::cli

#include "meetlogic/combination.hpp"

namespace meet {

namespace {

Signature build_combined(const Signature& s1, const Signature& s2) {
  std::vector<Constructor> cs;
  for (std::size_t n : s1.arities())
    for (const auto& c1 : s1.constructors(n))
      for (const auto& c2 : s2.constructors(n)) cs.push_back(Constructor::meet(c1, c2));
  std::map<std::size_t, Constructor> family;
  for (std::size_t n : s1.arities()) {
    if (n == 0 || s2.constructors(n).empty()) continue;
    family.emplace(n, Constructor::meet(s1.verum_of_arity(n), s2.verum_of_arity(n)));
  }
  return Signature("", std::move(cs), Constructor::meet(s1.verum(), s2.verum()),
                   Constructor::meet(s1.falsum(), s2.falsum()), std::move(family));
}

}  // namespace

CombinedSignature::CombinedSignature(Signature s1, Signature s2)
    : s1_(std::move(s1)), s2_(std::move(s2)), combined_(build_combined(s1_, s2_)) {}

const Signature& CombinedSignature::component(int k) const {
  if (k == 1) return s1_;
  if (k == 2) return s2_;
  throw Error("component index must be 1 or 2");
}

Constructor CombinedSignature::pair(const Constructor& c1, const Constructor& c2) const {
  if (!s1_.contains(c1)) throw Error(c1.spelling() + " is not in the first component");
  if (!s2_.contains(c2)) throw Error(c2.spelling() + " is not in the second component");
  return Constructor::meet(c1, c2);
}

Constructor CombinedSignature::embed_constructor(const Constructor& c, int k) const {
  const Signature& own = component(k);
  const Signature& other = component(3 - k);
  if (!own.contains(c)) throw Error(c.spelling() + " is not in component " + std::to_string(k));
  const Constructor& pad = other.verum_of_arity(c.arity());
  return k == 1 ? Constructor::meet(c, pad) : Constructor::meet(pad, c);
}

std::vector<Constructor> CombinedSignature::embedded(int k) const {
  std::vector<Constructor> out;
  for (const auto& c : component(k).all()) out.push_back(embed_constructor(c, k));
  return out;
}

bool CombinedSignature::is_embedded(const Constructor& c, int k) const {
  if (!c.is_pair() || !combined_.contains(c)) return false;
  return component(3 - k).is_verum_family(c.part(3 - k));
}

Formula CombinedSignature::falsum_of(int k) const {
  return Formula::app(embed_constructor(component(k).falsum(), k));
}

CombinedSignature combine_signatures(const Signature& s1, const Signature& s2) { return CombinedSignature(s1, s2); }

Formula embed(const Formula& f, int k, const CombinedSignature& cs) {
  if (f.is_var()) return f;
  std::vector<Formula> args;
  args.reserve(f.args().size());
  for (const auto& a : f.args()) args.push_back(embed(a, k, cs));
  return Formula::app(cs.embed_constructor(f.head(), k), std::move(args));
}

Formula project(const Formula& f, int k) {
  if (f.is_var()) return f;
  if (!f.head().is_pair()) throw Error("cannot project component constructor " + f.head().spelling());
  std::vector<Formula> args;
  args.reserve(f.args().size());
  for (const auto& a : f.args()) args.push_back(project(a, k));
  return Formula::app(f.head().part(k), std::move(args));
}

Substitution project(const Substitution& s, int k) {
  Substitution out;
  for (const auto& [v, img] : s) out.bind(v, project(img, k));
  return out;
}

Substitution embed(const Substitution& s, int k, const CombinedSignature& cs) {
  Substitution out;
  for (const auto& [v, img] : s) out.bind(v, embed(img, k, cs));
  return out;
}

Rule embed(const Rule& r, int k, const CombinedSignature& cs) {
  Rule out{r.name, {}, embed(r.conclusion, k, cs)};
  for (const auto& p : r.premises) out.premises.push_back(embed(p, k, cs));
  return out;
}

Rule project(const Rule& r, int k) {
  Rule out{r.name, {}, project(r.conclusion, k)};
  for (const auto& p : r.premises) out.premises.push_back(project(p, k));
  return out;
}

std::string tagged_rule_name(const std::string& source, const Constructor& c) {
  return source + "[" + c.spelling() + "]";
}

TaggedRuleSet tag_rule(const Rule& r, const std::vector<Constructor>& tags, int side) {
  if (!r.liberal()) return {TaggedRule{r, r.name, Constructor(), side}};
  const unsigned j = max_schema_index(r);
  const unsigned beta = r.conclusion.var_index();
  TaggedRuleSet out;
  out.reserve(tags.size());
  for (const auto& c : tags) {
    std::vector<Formula> fresh;
    for (std::size_t i = 1; i <= c.arity(); ++i) fresh.push_back(Formula::var(j + static_cast<unsigned>(i)));
    Substitution rho{{beta, Formula::app(c, std::move(fresh))}};
    Rule t = apply_substitution(rho, r);
    t.name = tagged_rule_name(r.name, c);
    out.push_back(TaggedRule{std::move(t), r.name, c, side});
  }
  return out;
}

TaggedRuleSet tag_rule(const Rule& r, const Signature& sig, int side) { return tag_rule(r, sig.all(), side); }

TaggedRuleSet tag_ruleset(const std::vector<Rule>& rs, const std::vector<Constructor>& tags, int side) {
  TaggedRuleSet out;
  for (const auto& r : rs) {
    auto part = tag_rule(r, tags, side);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

TaggedRuleSet tag_ruleset(const std::vector<Rule>& rs, const Signature& sig, int side) {
  return tag_ruleset(rs, sig.all(), side);
}

std::vector<Rule> rules_of(const TaggedRuleSet& ts) {
  std::vector<Rule> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(t.rule);
  return out;
}

}  // namespace meet

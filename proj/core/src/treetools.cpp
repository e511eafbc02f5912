#include "meetlogic/treetools.hpp"

#include <algorithm>
#include <numeric>

namespace meet {

namespace {

std::size_t build(const Formula& f, std::size_t parent, DecompTree& t) {
  std::size_t id = t.vertices.size();
  t.vertices.push_back({f, {}, parent});
  if (!f.is_var())
    for (const auto& a : f.args()) {
      std::size_t child = build(a, id, t);
      t.vertices[id].children.push_back(child);
    }
  return id;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const DecompTree& t1, const DecompTree& t2)
      : t1_(t1), t2_(t2), memo_(t1.size() * t2.size(), -1) {}

  std::optional<TreeEmbedding> run() {
    if (t1_.size() == 0 || t2_.size() == 0) return std::nullopt;
    for (std::size_t v = 0; v < t2_.size(); ++v) {
      if (fits(0, v)) {
        TreeEmbedding e{std::vector<std::size_t>(t1_.size(), 0)};
        assign(0, v, e);
        return e;
      }
    }
    return std::nullopt;
  }

 private:
  bool fits(std::size_t u, std::size_t v) {
    int& slot = memo_[u * t2_.size() + v];
    if (slot >= 0) return slot == 1;
    bool ok = t1_.outdegree(u) == 0 || (t1_.outdegree(u) == t2_.outdegree(v) && !child_match(u, v).empty());
    slot = ok ? 1 : 0;
    return ok;
  }

  /// Child permutation (identity tried first) under which every child fits; empty when none.
  std::vector<std::size_t> child_match(std::size_t u, std::size_t v) {
    const auto& cu = t1_.vertices[u].children;
    const auto& cv = t2_.vertices[v].children;
    std::vector<std::size_t> perm(cu.size());
    std::vector<bool> used(cv.size(), false);
    if (match_from(0, cu, cv, perm, used)) return perm;
    return {};
  }

  bool match_from(std::size_t i, const std::vector<std::size_t>& cu, const std::vector<std::size_t>& cv,
                  std::vector<std::size_t>& perm, std::vector<bool>& used) {
    if (i == cu.size()) return true;
    for (std::size_t offset = 0; offset < cv.size(); ++offset) {
      std::size_t j = (i + offset) % cv.size();
      if (used[j] || !fits(cu[i], cv[j])) continue;
      used[j] = true;
      perm[i] = j;
      if (match_from(i + 1, cu, cv, perm, used)) return true;
      used[j] = false;
    }
    return false;
  }

  void assign(std::size_t u, std::size_t v, TreeEmbedding& e) {
    e.vertex_map[u] = v;
    if (t1_.outdegree(u) == 0) return;
    auto perm = child_match(u, v);
    const auto& cu = t1_.vertices[u].children;
    const auto& cv = t2_.vertices[v].children;
    for (std::size_t i = 0; i < cu.size(); ++i) assign(cu[i], cv[perm[i]], e);
  }

  const DecompTree& t1_;
  const DecompTree& t2_;
  std::vector<int> memo_;
};

}  // namespace

DecompTree decomposition_tree(const Formula& f) {
  DecompTree t;
  t.vertices.reserve(f.size());
  build(f, 0, t);
  return t;
}

std::optional<TreeEmbedding> find_embedding(const DecompTree& t1, const DecompTree& t2) {
  return EmbeddingSearch(t1, t2).run();
}

bool is_embedding(const DecompTree& t1, const DecompTree& t2, const TreeEmbedding& e) {
  if (e.vertex_map.size() != t1.size()) return false;
  std::vector<bool> hit(t2.size(), false);
  for (std::size_t v : e.vertex_map) {
    if (v >= t2.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t u = 0; u < t1.size(); ++u) {
    const std::size_t hu = e.vertex_map[u];
    for (std::size_t c : t1.vertices[u].children) {
      const std::size_t hc = e.vertex_map[c];
      if (hc == 0 || t2.vertices[hc].parent != hu) return false;  // edge <u,c> must map to edge <hu,hc>
      if (t1.outdegree(u) != t2.outdegree(hu)) return false;
    }
  }
  return true;
}

bool trees_equiv(const DecompTree& t1, const DecompTree& t2) {
  return find_embedding(t1, t2).has_value() && find_embedding(t2, t1).has_value();
}

bool trees_equiv(const Formula& f1, const Formula& f2) {
  return trees_equiv(decomposition_tree(f1), decomposition_tree(f2));
}

std::string shape_key(const Formula& f) {
  if (f.is_var() || f.args().empty()) return "0";
  std::vector<std::string> kids;
  for (const auto& a : f.args()) kids.push_back(shape_key(a));
  std::sort(kids.begin(), kids.end());
  std::string out = std::to_string(f.args().size()) + "(";
  for (std::size_t i = 0; i < kids.size(); ++i) out += (i ? "," : "") + kids[i];
  return out + ")";
}

// ---------------------------------------------------------------------------

bool CompletionProfile::supports(const std::string& name) const {
  return cases.count({name, Target::Top}) && cases.count({name, Target::Bot});
}

CompletionProfile CompletionProfile::standard() {
  using T = Target;
  CompletionProfile p;
  for (const char* c : {"->", "and", "iff"}) {
    p.set(c, T::Top, {c, {T::Top, T::Top}});
    p.set(c, T::Bot, {c, {T::Top, T::Bot}});
  }
  p.set("or", T::Top, {"or", {T::Top, T::Top}});
  p.set("or", T::Bot, {"or", {T::Bot, T::Bot}});
  p.set("topn.2", T::Top, {"topn.2", {T::Top, T::Top}});
  p.set("topn.2", T::Bot, {"and", {T::Top, T::Bot}});
  p.set("neg", T::Top, {"neg", {T::Bot}});
  p.set("neg", T::Bot, {"neg", {T::Top}});
  p.set("topn.1", T::Top, {"topn.1", {T::Top}});
  p.set("topn.1", T::Bot, {"neg", {T::Top}});
  p.set("box", T::Top, {"box", {T::Top}});
  p.set("box", T::Bot, {"neg", {T::Top}});
  p.set("dia", T::Top, {"neg", {T::Bot}});
  p.set("dia", T::Bot, {"dia", {T::Bot}});
  return p;
}

namespace {

Constructor named(const Signature& sig, const std::string& name) {
  auto c = sig.find(name);
  if (!c) throw Error("signature " + sig.tag() + " has no constructor '" + name + "'");
  return *c;
}

}  // namespace

Formula completion_formula(const Formula& psi, Target target, const Signature& sig, const CompletionProfile& profile,
                           const std::optional<std::string>& root_head) {
  if (psi.is_var() || psi.args().empty()) return target == Target::Top ? sig.top() : sig.bot();
  std::string head = root_head ? *root_head : psi.head().name();
  auto it = profile.cases.find({head, target});
  if (it == profile.cases.end()) throw Error("no completion table entry for constructor '" + head + "'");
  const CompletionCase& row = it->second;
  Constructor c = named(sig, row.head);
  if (c.arity() != psi.args().size() || row.child_targets.size() != c.arity())
    throw Error("completion head '" + row.head + "' does not have the arity of '" + psi.head().name() + "'");
  std::vector<Formula> args;
  for (std::size_t i = 0; i < c.arity(); ++i)
    args.push_back(completion_formula(psi.arg(i), row.child_targets[i], sig, profile));
  return Formula::app(c, std::move(args));
}

Formula transliterate_shape(const Formula& f, const Signature& sig_b, const CompletionProfile* prefer) {
  if (f.is_var()) return f;
  const std::size_t n = f.args().size();
  const auto& pool = sig_b.constructors(n);
  if (pool.empty())
    throw Error("signature " + sig_b.tag() + " has no constructor of arity " + std::to_string(n) +
                " (signatures are not similar)");
  Constructor rep = pool.front();
  bool chosen = false;
  for (const auto& c : pool) {
    if (sig_b.is_verum_family(c)) continue;
    if (prefer && !prefer->supports(c.name())) continue;
    rep = c;
    chosen = true;
    break;
  }
  if (!chosen && prefer)
    for (const auto& c : pool)
      if (prefer->supports(c.name())) {
        rep = c;
        break;
      }
  std::vector<Formula> args;
  for (const auto& a : f.args()) args.push_back(transliterate_shape(a, sig_b, prefer));
  return Formula::app(rep, std::move(args));
}

namespace {

Target filler_target(const IdentityProfile& p, std::size_t position) {
  const std::string& name = p.fillers.at(position - 1);
  if (name == "top") return Target::Top;
  if (name == "bot") return Target::Bot;
  throw Error("completion position must hold the filler top or bot, found '" + name + "'");
}

Formula wrap(const Signature& sig, const IdentityProfile& p, const Formula& identity_arg, std::size_t other_pos,
             const Formula& other_arg) {
  Constructor c = named(sig, p.constructor);
  if (p.fillers.size() != c.arity()) throw Error("identity profile needs one filler entry per argument");
  std::vector<Formula> args;
  for (std::size_t i = 1; i <= c.arity(); ++i) {
    if (i == p.position) args.push_back(identity_arg);
    else if (i == other_pos) args.push_back(other_arg);
    else args.push_back(Formula::app(named(sig, p.fillers[i - 1])));
  }
  return Formula::app(c, std::move(args));
}

}  // namespace

EqualizedPair equalize_pair(const Formula& f1, const Signature& s1, const IdentityProfile& p1,
                            const CompletionProfile& c1, const Formula& f2, const Signature& s2,
                            const IdentityProfile& p2, const CompletionProfile& c2) {
  if (p1.position == p2.position) throw Error("identity positions must differ (complementary constructors)");
  if (p1.completion_position != p2.position || p2.completion_position != p1.position)
    throw Error("each constructor must complete at the other's identity position");
  if (named(s1, p1.constructor).arity() != named(s2, p2.constructor).arity())
    throw Error("complementary constructors must have the same arity");
  if (!s1.similar_to(s2)) throw Error("signatures are not similar");
  Formula psi1 = transliterate_shape(f2, s1, &c1);
  Formula psi2 = transliterate_shape(f1, s2, &c2);
  Formula delta1 = completion_formula(psi1, filler_target(p1, p2.position), s1, c1);
  Formula delta2 = completion_formula(psi2, filler_target(p2, p1.position), s2, c2);
  return {wrap(s1, p1, f1, p2.position, delta1), wrap(s2, p2, f2, p1.position, delta2)};
}

}  // namespace meet

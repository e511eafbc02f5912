#include "meetlogic/formula.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace meet {

namespace detail {

struct ConstructorData {
  std::string name;
  std::string tag;
  std::size_t arity = 0;
  std::string spelling;
  const ConstructorData* first = nullptr;
  const ConstructorData* second = nullptr;
};

struct FormulaNode {
  unsigned var = 0;  // 0 for applications
  Constructor head;
  std::vector<Formula> args;
  std::size_t hash = 0;
  std::size_t size = 1;
  unsigned depth = 0;
};

namespace {

class ConstructorTable {
 public:
  const ConstructorData* intern(ConstructorData proto) {
    std::string key = std::to_string(proto.arity) + "/" + proto.spelling;
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second.get();
    auto owned = std::make_unique<ConstructorData>(std::move(proto));
    const ConstructorData* raw = owned.get();
    table_.emplace(std::move(key), std::move(owned));
    return raw;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<std::string, std::unique_ptr<ConstructorData>> table_;
};

ConstructorTable& constructor_table() {
  static auto* table = new ConstructorTable();  // intentionally leaked; constructors outlive statics
  return *table;
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace
}  // namespace detail

Constructor Constructor::make(std::string_view name, std::string_view tag, std::size_t arity) {
  if (name.empty()) throw Error("constructor name must be non-empty");
  detail::ConstructorData d;
  d.name = std::string(name);
  d.tag = std::string(tag);
  d.arity = arity;
  d.spelling = tag.empty() ? d.name : d.name + "." + d.tag;
  return Constructor(detail::constructor_table().intern(std::move(d)));
}

Constructor Constructor::meet(const Constructor& first, const Constructor& second) {
  if (!first.valid() || !second.valid()) throw Error("cannot pair an empty constructor");
  if (first.is_pair() || second.is_pair()) throw Error("only component constructors can be paired");
  if (first.arity() != second.arity())
    throw Error("paired constructors must have equal arity: " + first.spelling() + " / " + second.spelling());
  detail::ConstructorData d;
  d.arity = first.arity();
  d.spelling = "<" + first.spelling() + "|" + second.spelling() + ">";
  d.first = first.data_;
  d.second = second.data_;
  return Constructor(detail::constructor_table().intern(std::move(d)));
}

bool Constructor::is_pair() const { return data_ != nullptr && data_->first != nullptr; }

std::size_t Constructor::arity() const {
  if (!data_) throw Error("empty constructor");
  return data_->arity;
}

const std::string& Constructor::name() const {
  if (!data_ || is_pair()) throw Error("name() requires a component constructor");
  return data_->name;
}

const std::string& Constructor::tag() const {
  if (!data_ || is_pair()) throw Error("tag() requires a component constructor");
  return data_->tag;
}

Constructor Constructor::part(int k) const {
  if (!is_pair()) throw Error("part() requires a paired constructor");
  if (k == 1) return Constructor(data_->first);
  if (k == 2) return Constructor(data_->second);
  throw Error("component index must be 1 or 2");
}

const std::string& Constructor::spelling() const {
  if (!data_) throw Error("empty constructor");
  return data_->spelling;
}

bool operator<(const Constructor& a, const Constructor& b) {
  if (a.data_ == b.data_) return false;
  if (!a.data_ || !b.data_) return a.data_ == nullptr;
  if (a.data_->spelling != b.data_->spelling) return a.data_->spelling < b.data_->spelling;
  return a.data_->arity < b.data_->arity;
}

// ---------------------------------------------------------------------------

Formula Formula::var(unsigned index) {
  if (index == 0) throw Error("schema variable indices start at 1");
  auto n = std::make_shared<detail::FormulaNode>();
  n->var = index;
  n->hash = detail::mix(0x51ed270b27d1f0a3ULL, index);
  return Formula(std::move(n));
}

Formula Formula::app(const Constructor& head, std::vector<Formula> args) {
  if (!head.valid()) throw Error("empty constructor");
  if (head.arity() != args.size())
    throw Error("arity mismatch: " + head.spelling() + " expects " + std::to_string(head.arity()) +
                " argument(s), got " + std::to_string(args.size()));
  auto n = std::make_shared<detail::FormulaNode>();
  n->head = head;
  std::size_t h = detail::mix(0x2545f4914f6cdd1dULL, head.hash());
  for (const auto& a : args) {
    if (!a.valid()) throw Error("empty argument formula");
    h = detail::mix(h, a.hash());
    n->size += a.size();
    n->depth = std::max(n->depth, a.depth() + 1);
  }
  n->hash = h;
  n->args = std::move(args);
  return Formula(std::move(n));
}

bool Formula::is_var() const { return node_->var != 0; }

unsigned Formula::var_index() const {
  if (!is_var()) throw Error("not a schema variable");
  return node_->var;
}

const Constructor& Formula::head() const {
  if (is_var()) throw Error("schema variables have no head constructor");
  return node_->head;
}

std::span<const Formula> Formula::args() const {
  return {node_->args.data(), node_->args.size()};
}

std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }
unsigned Formula::depth() const { return node_->depth; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
  if (a.node_->var != b.node_->var) return false;
  if (a.node_->var != 0) return true;
  if (!(a.node_->head == b.node_->head)) return false;
  for (std::size_t i = 0; i < a.node_->args.size(); ++i)
    if (a.node_->args[i] != b.node_->args[i]) return false;
  return true;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  const bool av = a.is_var(), bv = b.is_var();
  if (av != bv) return av;
  if (av) return a.var_index() < b.var_index();
  if (!(a.head() == b.head())) return a.head() < b.head();
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (a.arg(i) < b.arg(i)) return true;
    if (b.arg(i) < a.arg(i)) return false;
  }
  return false;
}

// ---------------------------------------------------------------------------

const Formula* Substitution::find(unsigned var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

Formula apply_substitution(const Substitution& s, const Formula& f) {
  if (s.empty()) return f;
  if (f.is_var()) {
    const Formula* img = s.find(f.var_index());
    return img ? *img : f;
  }
  if (f.args().empty()) return f;
  std::vector<Formula> args;
  args.reserve(f.args().size());
  bool changed = false;
  for (const auto& a : f.args()) {
    args.push_back(apply_substitution(s, a));
    changed = changed || args.back().identity() != a.identity();
  }
  return changed ? Formula::app(f.head(), std::move(args)) : f;
}

Substitution compose(const Substitution& s2, const Substitution& s1) {
  Substitution out;
  for (const auto& [v, img] : s1) out.bind(v, apply_substitution(s2, img));
  for (const auto& [v, img] : s2)
    if (!s1.contains(v)) out.bind(v, img);
  return out;
}

bool match_into(const Formula& pattern, const Formula& target, Substitution& s) {
  if (pattern.is_var()) {
    if (const Formula* bound = s.find(pattern.var_index())) return *bound == target;
    s.bind(pattern.var_index(), target);
    return true;
  }
  if (target.is_var() || !(pattern.head() == target.head())) return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_into(pattern.arg(i), target.arg(i), s)) return false;
  return true;
}

std::optional<Substitution> match_formula(const Formula& pattern, const Formula& target) {
  Substitution s;
  if (!match_into(pattern, target, s)) return std::nullopt;
  return s;
}

unsigned max_schema_index(const Formula& f) {
  if (f.is_var()) return f.var_index();
  unsigned m = 0;
  for (const auto& a : f.args()) m = std::max(m, max_schema_index(a));
  return m;
}

void collect_variables(const Formula& f, std::set<unsigned>& out) {
  if (f.is_var()) {
    out.insert(f.var_index());
    return;
  }
  for (const auto& a : f.args()) collect_variables(a, out);
}

std::set<unsigned> variables(const Formula& f) {
  std::set<unsigned> out;
  collect_variables(f, out);
  return out;
}

namespace {
void collect_subformulas(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  if (!f.is_var())
    for (const auto& a : f.args()) collect_subformulas(a, out);
}
}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  collect_subformulas(f, out);
  return out;
}

}  // namespace meet

#include "meetlogic/signature.hpp"

#include <algorithm>

namespace meet {

std::string verum_family_name(std::size_t arity) { return "topn." + std::to_string(arity); }

namespace {
const std::vector<Constructor>& no_constructors() {
  static const std::vector<Constructor> empty;
  return empty;
}

std::string bare_name(const Constructor& c) { return c.is_pair() ? c.spelling() : c.name(); }
}  // namespace

Signature::Signature(std::string tag, std::vector<Constructor> constructors, Constructor verum, Constructor falsum,
                     std::map<std::size_t, Constructor> verum_family)
    : tag_(std::move(tag)), verum_(verum), falsum_(falsum), verum_family_(std::move(verum_family)) {
  for (const auto& c : constructors) {
    auto& bucket = by_arity_[c.arity()];
    if (std::find(bucket.begin(), bucket.end(), c) != bucket.end())
      throw Error("duplicate constructor " + c.spelling());
    auto [it, inserted] = by_name_.emplace(bare_name(c), c);
    if (!inserted) throw Error("constructor name used twice: " + bare_name(c));
    bucket.push_back(c);
  }
  if (!verum_.valid() || !falsum_.valid()) throw Error("signature needs verum and falsum");
  if (verum_.arity() != 0 || falsum_.arity() != 0) throw Error("verum and falsum must be nullary");
  if (!contains(verum_) || !contains(falsum_)) throw Error("verum and falsum must belong to the signature");
  for (const auto& [n, bucket] : by_arity_) {
    if (n == 0 || bucket.empty()) continue;
    auto it = verum_family_.find(n);
    if (it == verum_family_.end())
      throw Error("signature " + tag_ + " lacks a verum constructor of arity " + std::to_string(n));
    if (it->second.arity() != n || !contains(it->second))
      throw Error("verum family entry of arity " + std::to_string(n) + " is not a member");
  }
}

const std::vector<Constructor>& Signature::constructors(std::size_t arity) const {
  auto it = by_arity_.find(arity);
  return it == by_arity_.end() ? no_constructors() : it->second;
}

std::vector<Constructor> Signature::all() const {
  std::vector<Constructor> out;
  for (const auto& [n, bucket] : by_arity_) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::vector<std::size_t> Signature::arities() const {
  std::vector<std::size_t> out;
  for (const auto& [n, bucket] : by_arity_)
    if (!bucket.empty()) out.push_back(n);
  return out;
}

std::size_t Signature::size() const {
  std::size_t n = 0;
  for (const auto& [a, bucket] : by_arity_) n += bucket.size();
  return n;
}

bool Signature::contains(const Constructor& c) const {
  const auto& bucket = constructors(c.arity());
  return std::find(bucket.begin(), bucket.end(), c) != bucket.end();
}

std::optional<Constructor> Signature::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const Constructor& Signature::verum_of_arity(std::size_t n) const {
  if (n == 0) return verum_;
  auto it = verum_family_.find(n);
  if (it == verum_family_.end())
    throw Error("signature " + tag_ + " has no verum constructor of arity " + std::to_string(n));
  return it->second;
}

bool Signature::is_verum_family(const Constructor& c) const {
  if (c == verum_) return true;
  auto it = verum_family_.find(c.arity());
  return it != verum_family_.end() && it->second == c;
}

bool Signature::well_formed(const Formula& f) const {
  if (f.is_var()) return true;
  if (!contains(f.head())) return false;
  for (const auto& a : f.args())
    if (!well_formed(a)) return false;
  return true;
}

void Signature::require_well_formed(const Formula& f) const {
  if (f.is_var()) return;
  if (!contains(f.head()))
    throw Error("constructor " + f.head().spelling() + " is not in signature " + (tag_.empty() ? "<combined>" : tag_));
  for (const auto& a : f.args()) require_well_formed(a);
}

bool Signature::similar_to(const Signature& other) const { return arities() == other.arities(); }

Signature make_signature(const std::string& tag, const std::vector<std::pair<std::string, std::size_t>>& ops) {
  std::vector<Constructor> cs;
  Constructor top = Constructor::make(kVerumName, tag, 0);
  Constructor bot = Constructor::make(kFalsumName, tag, 0);
  cs.push_back(top);
  cs.push_back(bot);
  std::map<std::size_t, Constructor> family;
  for (const auto& [name, arity] : ops) {
    if (name == kVerumName || name == kFalsumName || name.rfind("topn.", 0) == 0) continue;
    cs.push_back(Constructor::make(name, tag, arity));
    if (arity > 0 && !family.count(arity)) family.emplace(arity, Constructor::make(verum_family_name(arity), tag, arity));
  }
  for (const auto& [n, c] : family) cs.push_back(c);
  return Signature(tag, std::move(cs), top, bot, std::move(family));
}

Formula apply_substitution(const Substitution& s, const Formula& f, const Signature& sig) {
  for (const auto& [v, img] : s) {
    if (!sig.well_formed(img))
      throw Error("substitution image for xi" + std::to_string(v) + " is not over signature " + sig.tag());
  }
  return apply_substitution(s, f);
}

}  // namespace meet

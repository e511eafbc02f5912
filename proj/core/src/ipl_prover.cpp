#include "meetlogic/ipl_prover.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

namespace meet {

namespace {

enum class K : std::uint8_t { Atom, Bot, And, Or, Imp };

struct Node {
  K kind;
  int a = -1, b = -1;  // children, or the variable index for atoms
};

class G4ip {
 public:
  int translate(const Formula& f) {
    if (f.is_var()) return make(K::Atom, static_cast<int>(f.var_index()), -1);
    const std::string& name = f.head().is_pair() ? f.head().spelling() : f.head().name();
    auto arg = [&](std::size_t i) { return translate(f.arg(i)); };
    if (name == "bot") return bot();
    if (name == "top" || name.rfind("topn.", 0) == 0) return make(K::Imp, bot(), bot());
    if (name == "neg") return make(K::Imp, arg(0), bot());
    if (name == "and") return make(K::And, arg(0), arg(1));
    if (name == "or") return make(K::Or, arg(0), arg(1));
    if (name == "->") return make(K::Imp, arg(0), arg(1));
    if (name == "iff") {
      int x = arg(0), y = arg(1);
      return make(K::And, make(K::Imp, x, y), make(K::Imp, y, x));
    }
    throw Error("the intuitionistic prover does not know constructor '" + name + "'");
  }

  bool prove(std::vector<int> gamma, int goal) {
    std::sort(gamma.begin(), gamma.end());
    gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
    std::string key = std::to_string(goal) + "|";
    for (int g : gamma) key += std::to_string(g) + ",";
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = search(gamma, goal);
    memo_[key] = result;
    return result;
  }

 private:
  int make(K kind, int a, int b) {
    auto key = std::make_tuple(static_cast<int>(kind), a, b);
    if (auto it = intern_.find(key); it != intern_.end()) return it->second;
    nodes_.push_back(Node{kind, a, b});
    int id = static_cast<int>(nodes_.size() - 1);
    intern_.emplace(key, id);
    return id;
  }
  int bot() { return make(K::Bot, -1, -1); }

  static std::vector<int> without(const std::vector<int>& g, std::size_t i) {
    std::vector<int> out = g;
    out.erase(out.begin() + static_cast<long>(i));
    return out;
  }

  bool search(const std::vector<int>& gamma, int goal) {
    const Node gn = nodes_[goal];
    for (int h : gamma)
      if (h == goal || nodes_[h].kind == K::Bot) return true;

    // Invertible left rules.
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const Node n = nodes_[gamma[i]];
      if (n.kind == K::And) {
        auto rest = without(gamma, i);
        rest.push_back(n.a);
        rest.push_back(n.b);
        return prove(rest, goal);
      }
      if (n.kind == K::Or) {
        auto rest = without(gamma, i);
        auto left = rest, right = rest;
        left.push_back(n.a);
        right.push_back(n.b);
        return prove(left, goal) && prove(right, goal);
      }
      if (n.kind == K::Imp) {
        const Node ante = nodes_[n.a];
        if (ante.kind == K::Bot) return prove(without(gamma, i), goal);
        if (ante.kind == K::Atom && std::find(gamma.begin(), gamma.end(), n.a) != gamma.end()) {
          auto rest = without(gamma, i);
          rest.push_back(n.b);
          return prove(rest, goal);
        }
        if (ante.kind == K::And) {
          auto rest = without(gamma, i);
          rest.push_back(make(K::Imp, ante.a, make(K::Imp, ante.b, n.b)));
          return prove(rest, goal);
        }
        if (ante.kind == K::Or) {
          auto rest = without(gamma, i);
          rest.push_back(make(K::Imp, ante.a, n.b));
          rest.push_back(make(K::Imp, ante.b, n.b));
          return prove(rest, goal);
        }
      }
    }

    // Invertible right rules.
    if (gn.kind == K::And) return prove(gamma, gn.a) && prove(gamma, gn.b);
    if (gn.kind == K::Imp) {
      auto more = gamma;
      more.push_back(gn.a);
      return prove(more, gn.b);
    }

    // Non-invertible choices.
    if (gn.kind == K::Or && (prove(gamma, gn.a) || prove(gamma, gn.b))) return true;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const Node n = nodes_[gamma[i]];
      if (n.kind != K::Imp || nodes_[n.a].kind != K::Imp) continue;
      const Node inner = nodes_[n.a];  // (c -> d) -> b
      auto rest = without(gamma, i);
      auto first = rest;
      first.push_back(make(K::Imp, inner.b, n.b));
      first.push_back(inner.a);
      if (!prove(first, inner.b)) continue;
      auto second = rest;
      second.push_back(n.b);
      if (prove(second, goal)) return true;
    }
    return false;
  }

  std::vector<Node> nodes_;
  std::map<std::tuple<int, int, int>, int> intern_;
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace

bool ipl_derivable(const std::vector<Formula>& hyps, const Formula& goal) {
  G4ip prover;
  std::vector<int> gamma;
  for (const auto& h : hyps) gamma.push_back(prover.translate(h));
  int g = prover.translate(goal);
  return prover.prove(gamma, g);
}

bool ipl_theorem(const Formula& f) { return ipl_derivable({}, f); }

}  // namespace meet

#pragma once

#include <random>
#include <vector>

#include "meetlogic/signature.hpp"

namespace meet::testing {

/// Random formulas of bounded depth over a fixed alphabet.
class FormulaGen {
 public:
  FormulaGen(std::vector<Constructor> alphabet, unsigned variables, std::uint64_t seed)
      : rng_(seed), vars_(variables) {
    for (const auto& c : alphabet) (c.arity() == 0 ? leaves_ : inner_).push_back(c);
  }

  FormulaGen(const Signature& sig, unsigned variables, std::uint64_t seed)
      : FormulaGen(sig.all(), variables, seed) {}

  Formula leaf() {
    std::uniform_int_distribution<std::size_t> pick(0, vars_ + leaves_.size() - 1);
    std::size_t i = pick(rng_);
    if (i < vars_) return Formula::var(static_cast<unsigned>(i + 1));
    return Formula::app(leaves_[i - vars_]);
  }

  /// Depth at most `depth`; inner nodes are chosen with probability `branch`.
  Formula formula(unsigned depth, double branch = 0.75) {
    if (depth == 0 || inner_.empty() || !coin(branch)) return leaf();
    const Constructor& c = inner_[std::uniform_int_distribution<std::size_t>(0, inner_.size() - 1)(rng_)];
    std::vector<Formula> args;
    for (std::size_t i = 0; i < c.arity(); ++i) args.push_back(formula(depth - 1, branch));
    return Formula::app(c, std::move(args));
  }

  /// A formula whose root is a constructor application.
  Formula compound(unsigned depth, double branch = 0.75) {
    for (;;) {
      Formula f = formula(depth, branch);
      if (!f.is_var()) return f;
    }
  }

  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  unsigned vars_;
  std::vector<Constructor> leaves_;
  std::vector<Constructor> inner_;
};

}  // namespace meet::testing

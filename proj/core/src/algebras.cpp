#include "meetlogic/algebras.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace meet {

Matrix matrix_from_operations(std::string name, const Signature& sig, std::size_t carrier,
                              std::vector<unsigned> designated, const NamedOperation& op) {
  Matrix m(std::move(name), carrier, std::move(designated));
  for (const auto& c : sig.all()) {
    if (sig.is_verum_family(c) && c.arity() > 0) continue;
    const std::size_t n = c.arity();
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= carrier;
    std::vector<unsigned> table(size);
    std::vector<unsigned> args(n);
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::size_t rest = idx;
      for (std::size_t i = n; i-- > 0;) {
        args[i] = static_cast<unsigned>(rest % carrier);
        rest /= carrier;
      }
      table[idx] = op(c.name(), args);
    }
    m.set_table(c, std::move(table));
  }
  m.fill_verum_family(sig);
  m.validate(sig);
  return m;
}

namespace {

[[noreturn]] void unknown(std::string_view name, const std::string& algebra) {
  throw Error("no " + algebra + " interpretation for constructor '" + std::string(name) + "'");
}

}  // namespace

Matrix goedel_chain(const Signature& sig, std::size_t n) {
  if (n < 2) throw Error("Goedel chains need at least two values");
  const unsigned top = static_cast<unsigned>(n - 1);
  auto imp = [top](unsigned a, unsigned b) { return a <= b ? top : b; };
  return matrix_from_operations("G" + std::to_string(n), sig, n, {top},
                                [&](std::string_view name, std::span<const unsigned> a) -> unsigned {
                                  if (name == "top") return top;
                                  if (name == "bot") return 0;
                                  if (name == "neg") return imp(a[0], 0);
                                  if (name == "and") return std::min(a[0], a[1]);
                                  if (name == "or") return std::max(a[0], a[1]);
                                  if (name == "->") return imp(a[0], a[1]);
                                  if (name == "iff") return std::min(imp(a[0], a[1]), imp(a[1], a[0]));
                                  unknown(name, "Goedel");
                                });
}

Matrix boolean_matrix(const Signature& sig) {
  Matrix m = goedel_chain(sig, 2);
  m.rename("B2");
  return m;
}

Matrix lukasiewicz3(const Signature& sig) {
  auto imp = [](unsigned a, unsigned b) { return std::min(2u, 2u - a + b); };
  return matrix_from_operations("L3", sig, 3, {2}, [&](std::string_view name, std::span<const unsigned> a) -> unsigned {
    if (name == "top") return 2;
    if (name == "bot") return 0;
    if (name == "neg") return 2 - a[0];
    if (name == "and") return std::min(a[0], a[1]);
    if (name == "or") return std::max(a[0], a[1]);
    if (name == "->") return imp(a[0], a[1]);
    if (name == "iff") return std::min(imp(a[0], a[1]), imp(a[1], a[0]));
    unknown(name, "Lukasiewicz");
  });
}

Poset chain_poset(std::size_t n) {
  Poset p{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) p.leq[i][j] = true;
  return p;
}

Poset fork_poset(std::size_t branches) {
  const std::size_t n = branches + 1;
  Poset p{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (std::size_t i = 0; i < n; ++i) {
    p.leq[i][i] = true;
    p.leq[0][i] = true;
  }
  return p;
}

Matrix heyting_upsets(std::string name, const Signature& sig, const Poset& p) {
  if (p.size == 0 || p.size > 16) throw Error("poset size must be between 1 and 16");
  using Set = std::uint32_t;
  std::vector<Set> ups;
  for (Set s = 0; s < (Set(1) << p.size); ++s) {
    bool up = true;
    for (std::size_t i = 0; i < p.size && up; ++i)
      if (s >> i & 1)
        for (std::size_t j = 0; j < p.size; ++j)
          if (p.leq[i][j] && !(s >> j & 1)) up = false;
    if (up) ups.push_back(s);
  }
  std::stable_sort(ups.begin(), ups.end(), [](Set a, Set b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  auto index = [&](Set s) {
    return static_cast<unsigned>(std::find(ups.begin(), ups.end(), s) - ups.begin());
  };
  const Set full = (Set(1) << p.size) - 1;
  auto imp = [&](Set a, Set b) {
    Set out = 0;
    for (std::size_t x = 0; x < p.size; ++x) {
      bool ok = true;
      for (std::size_t y = 0; y < p.size && ok; ++y)
        if (p.leq[x][y] && (a >> y & 1) && !(b >> y & 1)) ok = false;
      if (ok) out |= Set(1) << x;
    }
    return out;
  };
  const unsigned top = index(full);
  return matrix_from_operations(std::move(name), sig, ups.size(), {top},
                                [&](std::string_view op, std::span<const unsigned> a) -> unsigned {
                                  if (op == "top") return top;
                                  if (op == "bot") return index(0);
                                  if (op == "neg") return index(imp(ups[a[0]], 0));
                                  if (op == "and") return index(ups[a[0]] & ups[a[1]]);
                                  if (op == "or") return index(ups[a[0]] | ups[a[1]]);
                                  if (op == "->") return index(imp(ups[a[0]], ups[a[1]]));
                                  if (op == "iff")
                                    return index(imp(ups[a[0]], ups[a[1]]) & imp(ups[a[1]], ups[a[0]]));
                                  unknown(op, "Heyting");
                                });
}

bool KripkeFrame::reflexive() const {
  for (std::size_t w = 0; w < worlds; ++w)
    if (!r[w][w]) return false;
  return true;
}

bool KripkeFrame::irreflexive() const {
  for (std::size_t w = 0; w < worlds; ++w)
    if (r[w][w]) return false;
  return true;
}

bool KripkeFrame::transitive() const {
  for (std::size_t a = 0; a < worlds; ++a)
    for (std::size_t b = 0; b < worlds; ++b)
      if (r[a][b])
        for (std::size_t c = 0; c < worlds; ++c)
          if (r[b][c] && !r[a][c]) return false;
  return true;
}

bool KripkeFrame::weakly_connected() const {
  for (std::size_t w = 0; w < worlds; ++w)
    for (std::size_t u = 0; u < worlds; ++u)
      for (std::size_t v = 0; v < worlds; ++v)
        if (r[w][u] && r[w][v] && !r[u][v] && !r[v][u]) return false;
  return true;
}

void KripkeFrame::validate() const {
  if (worlds == 0 || worlds > 16) throw Error("frames need between 1 and 16 worlds");
  if (r.size() != worlds) throw Error("relation size does not match the world count");
  for (const auto& row : r)
    if (row.size() != worlds) throw Error("relation size does not match the world count");
  switch (kind) {
    case FrameClass::Any: return;
    case FrameClass::S43:
      if (!reflexive()) throw Error("S4.3 frame is not reflexive");
      if (!transitive()) throw Error("S4.3 frame is not transitive");
      if (!weakly_connected()) throw Error("S4.3 frame is not connected");
      return;
    case FrameClass::GL:
      if (!transitive()) throw Error("GL frame is not transitive");
      if (!irreflexive()) throw Error("GL frame is not irreflexive");
      return;
  }
}

Matrix kripke_matrix(const KripkeFrame& f, const Signature& sig) {
  f.validate();
  using Set = std::uint32_t;
  const Set full = (Set(1) << f.worlds) - 1;
  auto box = [&](Set u) {
    Set out = 0;
    for (std::size_t w = 0; w < f.worlds; ++w) {
      bool ok = true;
      for (std::size_t v = 0; v < f.worlds && ok; ++v)
        if (f.r[w][v] && !(u >> v & 1)) ok = false;
      if (ok) out |= Set(1) << w;
    }
    return out;
  };
  std::string name = "K" + std::to_string(f.worlds) + ":";
  for (std::size_t a = 0; a < f.worlds; ++a)
    for (std::size_t b = 0; b < f.worlds; ++b) name += f.r[a][b] ? '1' : '0';
  return matrix_from_operations(name, sig, std::size_t(1) << f.worlds, {full},
                                [&](std::string_view op, std::span<const unsigned> a) -> unsigned {
                                  if (op == "top") return full;
                                  if (op == "bot") return 0;
                                  if (op == "neg") return full & ~a[0];
                                  if (op == "and") return a[0] & a[1];
                                  if (op == "or") return a[0] | a[1];
                                  if (op == "->") return (full & ~a[0]) | a[1];
                                  if (op == "iff") return full & ~(a[0] ^ a[1]);
                                  if (op == "box") return box(a[0]);
                                  if (op == "dia") return full & ~box(full & ~a[0]);
                                  unknown(op, "Kripke");
                                });
}

namespace {

std::string canonical_key(const KripkeFrame& f) {
  std::vector<std::size_t> perm(f.worlds);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key;
    for (std::size_t a = 0; a < f.worlds; ++a)
      for (std::size_t b = 0; b < f.worlds; ++b) key += f.r[perm[a]][perm[b]] ? '1' : '0';
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<KripkeFrame> enumerate_frames(FrameClass kind, std::size_t max_worlds) {
  if (max_worlds > 4) throw Error("frame enumeration is limited to 4 worlds");
  std::vector<KripkeFrame> out;
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    std::set<std::string> seen;
    const std::size_t cells = n * n;
    for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << cells); ++bits) {
      KripkeFrame f{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)), kind};
      for (std::size_t i = 0; i < cells; ++i) f.r[i / n][i % n] = bits >> i & 1;
      bool ok = false;
      switch (kind) {
        case FrameClass::Any: ok = true; break;
        case FrameClass::S43: ok = f.reflexive() && f.transitive() && f.weakly_connected(); break;
        case FrameClass::GL: ok = f.irreflexive() && f.transitive(); break;
      }
      if (!ok) continue;
      if (seen.insert(canonical_key(f)).second) out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace meet

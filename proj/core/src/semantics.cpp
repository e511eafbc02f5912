#include "meetlogic/semantics.hpp"

#include <algorithm>
#include <sstream>

#include "meetlogic/parser.hpp"

namespace meet {

Matrix::Matrix(std::string name, std::size_t carrier, std::vector<unsigned> designated)
    : name_(std::move(name)), carrier_(carrier), designated_(carrier, false) {
  if (carrier == 0) throw Error("matrix carrier must be nonempty");
  if (designated.empty()) throw Error("matrix needs at least one designated value");
  for (unsigned d : designated) {
    if (d >= carrier) throw Error("designated value " + std::to_string(d) + " outside the carrier");
    designated_[d] = true;
  }
}

std::vector<unsigned> Matrix::designated_values() const {
  std::vector<unsigned> out;
  for (unsigned a = 0; a < carrier_; ++a)
    if (designated_[a]) out.push_back(a);
  return out;
}

void Matrix::set_table(const Constructor& c, std::vector<unsigned> table) {
  std::size_t expected = 1;
  for (std::size_t i = 0; i < c.arity(); ++i) expected *= carrier_;
  if (table.size() != expected)
    throw Error("table for " + c.spelling() + " needs " + std::to_string(expected) + " entries, got " +
                std::to_string(table.size()));
  for (unsigned v : table)
    if (v >= carrier_) throw Error("table for " + c.spelling() + " leaves the carrier");
  tables_[c] = std::move(table);
}

const std::vector<unsigned>& Matrix::table(const Constructor& c) const {
  auto it = tables_.find(c);
  if (it == tables_.end()) throw Error("matrix " + name_ + " does not interpret " + c.spelling());
  return it->second;
}

unsigned Matrix::apply(const Constructor& c, std::span<const unsigned> args) const {
  const auto& t = table(c);
  std::size_t idx = 0;
  for (unsigned a : args) idx = idx * carrier_ + a;
  return t[idx];
}

std::vector<Constructor> Matrix::constructors() const {
  std::vector<Constructor> out;
  for (const auto& [c, t] : tables_) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

void Matrix::fill_verum_family(const Signature& sig) {
  const unsigned top = table(sig.verum())[0];
  for (std::size_t n : sig.arities()) {
    if (n == 0) continue;
    const Constructor& c = sig.verum_of_arity(n);
    if (interprets(c)) continue;
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= carrier_;
    set_table(c, std::vector<unsigned>(size, top));
  }
}

void Matrix::validate(const Signature& sig) const {
  for (const auto& c : sig.all())
    if (!interprets(c)) throw Error("matrix " + name_ + " does not interpret " + c.spelling());
  const unsigned top = table(sig.verum())[0];
  if (!designated(top)) throw Error("matrix " + name_ + ": verum must be designated");
  if (designated(table(sig.falsum())[0])) throw Error("matrix " + name_ + ": falsum must not be designated");
  for (std::size_t n : sig.arities()) {
    if (n == 0) continue;
    for (unsigned v : table(sig.verum_of_arity(n)))
      if (v != top) throw Error("matrix " + name_ + ": " + sig.verum_of_arity(n).spelling() + " must be constant top");
  }
}

namespace {

unsigned eval_fast(const Matrix& m, const std::vector<int>& vals, const Formula& f) {
  if (f.is_var()) {
    unsigned k = f.var_index();
    if (k >= vals.size() || vals[k] < 0) throw Error("no value assigned to xi" + std::to_string(k));
    return static_cast<unsigned>(vals[k]);
  }
  const auto& t = m.table(f.head());
  std::size_t idx = 0;
  for (const auto& a : f.args()) idx = idx * m.carrier() + eval_fast(m, vals, a);
  return t[idx];
}

std::vector<int> flatten(const Assignment& asg) {
  unsigned top = asg.empty() ? 0 : asg.rbegin()->first;
  std::vector<int> vals(top + 1, -1);
  for (const auto& [k, v] : asg) vals[k] = static_cast<int>(v);
  return vals;
}

std::set<unsigned> variables_of(const std::vector<Formula>& gamma, const Formula& f) {
  std::set<unsigned> vars = variables(f);
  for (const auto& g : gamma) collect_variables(g, vars);
  return vars;
}

/// Counter over all assignments of `vars`; calls `visit` with the flat value vector.
template <class Visit>
bool sweep(const Matrix& m, const std::set<unsigned>& vars, Visit&& visit) {
  std::vector<unsigned> order(vars.begin(), vars.end());
  std::vector<int> vals((order.empty() ? 0 : order.back()) + 1, -1);
  for (unsigned k : order) vals[k] = 0;
  while (true) {
    if (!visit(vals)) return false;
    std::size_t i = order.size();
    while (i > 0) {
      --i;
      if (static_cast<std::size_t>(++vals[order[i]]) < m.carrier()) break;
      vals[order[i]] = 0;
      if (i == 0) return true;
    }
    if (order.empty()) return true;
  }
}

}  // namespace

unsigned eval(const Matrix& m, const Assignment& asg, const Formula& f) {
  for (const auto& [k, v] : asg)
    if (v >= m.carrier()) throw Error("assigned value outside the carrier of " + m.name());
  return eval_fast(m, flatten(asg), f);
}

void for_each_assignment(const Matrix& m, const std::set<unsigned>& vars,
                         const std::function<bool(const Assignment&)>& visit) {
  sweep(m, vars, [&](const std::vector<int>& vals) {
    Assignment asg;
    for (unsigned k : vars) asg[k] = static_cast<unsigned>(vals[k]);
    return visit(asg);
  });
}

bool holds(const Matrix& m, const Formula& f) { return entails(m, {}, f); }

bool entails(const Matrix& m, const std::vector<Formula>& gamma, const Formula& f) {
  return sweep(m, variables_of(gamma, f), [&](const std::vector<int>& vals) {
    for (const auto& g : gamma)
      if (!m.designated(eval_fast(m, vals, g))) return true;
    return m.designated(eval_fast(m, vals, f));
  });
}

bool entails(const std::vector<Matrix>& ms, const std::vector<Formula>& gamma, const Formula& f) {
  for (const auto& m : ms)
    if (!entails(m, gamma, f)) return false;
  return true;
}

std::optional<Countermodel> find_countermodel(const std::vector<Matrix>& ms, const std::vector<Formula>& gamma,
                                              const Formula& f) {
  const auto vars = variables_of(gamma, f);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    std::optional<Countermodel> found;
    sweep(ms[i], vars, [&](const std::vector<int>& vals) {
      for (const auto& g : gamma)
        if (!ms[i].designated(eval_fast(ms[i], vals, g))) return true;
      if (ms[i].designated(eval_fast(ms[i], vals, f))) return true;
      Countermodel cm{i, {}};
      for (unsigned k : vars) cm.assignment[k] = static_cast<unsigned>(vals[k]);
      found = std::move(cm);
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

unsigned product_value(const Matrix& m2, unsigned a1, unsigned a2) {
  return a1 * static_cast<unsigned>(m2.carrier()) + a2;
}

std::pair<unsigned, unsigned> product_parts(const Matrix& m2, unsigned a) {
  const auto n2 = static_cast<unsigned>(m2.carrier());
  return {a / n2, a % n2};
}

Matrix product_matrix(const Matrix& m1, const Matrix& m2, const CombinedSignature& cs) {
  const std::size_t n1 = m1.carrier(), n2 = m2.carrier(), n = n1 * n2;
  std::vector<unsigned> designated;
  for (unsigned a : m1.designated_values())
    for (unsigned b : m2.designated_values()) designated.push_back(product_value(m2, a, b));
  std::sort(designated.begin(), designated.end());
  Matrix out(m1.name() + "x" + m2.name(), n, designated);
  for (const auto& c : cs.combined().all()) {
    const auto& t1 = m1.table(c.part(1));
    const auto& t2 = m2.table(c.part(2));
    const std::size_t arity = c.arity();
    std::size_t size = 1;
    for (std::size_t i = 0; i < arity; ++i) size *= n;
    std::vector<unsigned> table(size);
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::size_t rest = idx, i1 = 0, i2 = 0, scale1 = 1, scale2 = 1;
      for (std::size_t i = 0; i < arity; ++i) {
        auto [a, b] = product_parts(m2, static_cast<unsigned>(rest % n));
        rest /= n;
        i1 += a * scale1;
        i2 += b * scale2;
        scale1 *= n1;
        scale2 *= n2;
      }
      table[idx] = product_value(m2, t1[i1], t2[i2]);
    }
    out.set_table(c, std::move(table));
  }
  return out;
}

bool check_rule_soundness(const std::vector<Matrix>& ms, const Rule& r) { return entails(ms, r.premises, r.conclusion); }

std::string print_matrix(const Matrix& m) {
  std::ostringstream out;
  if (!m.name().empty()) out << "name " << m.name() << "\n";
  out << "carrier " << m.carrier() << "\n";
  out << "designated";
  for (unsigned d : m.designated_values()) out << " " << d;
  out << "\n";
  for (const auto& c : m.constructors()) {
    out << "op " << (c.is_pair() ? c.spelling() : c.name());
    for (unsigned v : m.table(c)) out << " " << v;
    out << "\n";
  }
  return out.str();
}

Matrix parse_matrix(std::string_view text, const Signature& sig) {
  std::string name;
  std::optional<std::size_t> carrier;
  std::vector<unsigned> designated;
  std::vector<std::pair<std::string, std::vector<unsigned>>> ops;
  std::size_t line_no = 0;
  for (const auto& raw : split_trim(text, '\n')) {
    ++line_no;
    if (raw.empty() || raw[0] == '#') continue;
    std::istringstream words(raw);
    std::string key;
    words >> key;
    auto numbers = [&] {
      std::vector<unsigned> out;
      std::string w;
      while (words >> w) {
        if (w.find_first_not_of("0123456789") != std::string::npos)
          throw Error("matrix line " + std::to_string(line_no) + ": expected an integer, got '" + w + "'");
        out.push_back(static_cast<unsigned>(std::stoul(w)));
      }
      return out;
    };
    if (key == "name") {
      words >> name;
    } else if (key == "carrier") {
      auto v = numbers();
      if (v.size() != 1) throw Error("matrix line " + std::to_string(line_no) + ": carrier takes one number");
      carrier = v[0];
    } else if (key == "designated") {
      designated = numbers();
    } else if (key == "op") {
      std::string op;
      words >> op;
      ops.emplace_back(op, numbers());
    } else {
      throw Error("matrix line " + std::to_string(line_no) + ": unknown keyword '" + key + "'");
    }
  }
  if (!carrier) throw Error("matrix text lacks a carrier line");
  Matrix m(name, *carrier, designated);
  for (auto& [op, table] : ops) {
    std::optional<Constructor> c = sig.find(op);
    if (!c) {
      auto dot = op.rfind('.');
      if (dot != std::string::npos && op.substr(dot + 1) == sig.tag()) c = sig.find(op.substr(0, dot));
    }
    if (!c) throw Error("matrix interprets unknown constructor '" + op + "'");
    m.set_table(*c, std::move(table));
  }
  m.fill_verum_family(sig);
  m.validate(sig);
  return m;
}

}  // namespace meet

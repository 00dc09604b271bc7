#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ncdioph/field_solve.hpp"
#include "ncdioph/solvers.hpp"

namespace ncd::detail {

std::vector<std::string> witness_key(const EqSystem& sys, const Assignment& a);
bool key_less(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Verified, deduplicated witnesses in canonical order.
class WitnessSet {
 public:
  explicit WitnessSet(const EqSystem& sys) : sys_(&sys) {}
  void add(const Assignment& a);
  bool full(std::size_t max) const;
  std::size_t size() const { return witnesses_.size(); }
  std::vector<Assignment> sorted() const;

 private:
  struct Less {
    bool operator()(const std::vector<std::string>& a, const std::vector<std::string>& b) const {
      return key_less(a, b);
    }
  };
  const EqSystem* sys_;
  std::map<std::vector<std::string>, Assignment, Less> witnesses_;
};

void finish(SolveReport& r, const WitnessSet& ws, std::size_t max);

inline std::vector<std::string> coefficient_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back("c" + std::to_string(k));
  return out;
}

/// Algebra elements whose coefficients are polynomials in indeterminates:
/// a map from basis keys to coefficient polynomials.
template <class Key, class Less>
struct Symbolic {
  using Map = std::map<Key, Poly, Less>;

  PolyRingPtr ring;
  Key unit;
  std::function<Key(const Key&, const Key&)> mul_keys;
  std::function<Map(const Element&, const PolyRingPtr&)> convert;
  std::map<std::string, Map> vars;

  Map constant(const Element& e) { return convert(e, ring); }
  Map variable(const std::string& name) { return vars.at(name); }
  Map add(Map a, const Map& b) {
    for (const auto& [k, c] : b) accumulate(a, k, c);
    return a;
  }
  Map neg(Map a) {
    for (auto& [k, c] : a) c = -c;
    return a;
  }
  Map sub(Map a, const Map& b) { return add(std::move(a), neg(b)); }
  Map mul(const Map& a, const Map& b) {
    Map out;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) accumulate(out, mul_keys(ka, kb), ca * cb);
    return out;
  }
  Map pow(const Map& a, unsigned long e) {
    Map out{{unit, Poly::from_int(ring, 1)}};
    for (unsigned long k = 0; k < e; ++k) out = mul(out, a);
    return out;
  }

  static void accumulate(Map& m, const Key& k, const Poly& c) {
    auto it = m.find(k);
    if (it == m.end()) {
      if (!c.is_zero()) m.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
};

struct AnsatzOutcome {
  FieldStatus status = FieldStatus::Unsat;
  bool truncated = false;
};

/// Substitutes x = sum_k c_k basis[x][k] into every equation, solves the
/// coefficient system over the field and adds the reconstructed witnesses.
template <class Key, class Less>
AnsatzOutcome ansatz_solve(const EqSystem& sys, const Field& field, const std::vector<std::vector<Key>>& basis,
                           Symbolic<Key, Less> sym,
                           const std::function<Element(const std::vector<std::pair<Key, Scalar>>&)>& build,
                           const SolveOptions& opts, WitnessSet& ws, SolveStats& stats) {
  std::size_t n = 0;
  for (const auto& b : basis) n += b.size();
  sym.ring = PolyRing::make(field, coefficient_names(n));
  std::size_t next = 0;
  for (std::size_t v = 0; v < sys.variables.size(); ++v) {
    typename Symbolic<Key, Less>::Map m;
    for (const auto& key : basis[v]) m.emplace(key, Poly::variable(sym.ring, next++));
    sym.vars[sys.variables[v]] = std::move(m);
  }
  FieldProblem problem{sym.ring, {}};
  for (const auto& eq : sys.equations)
    for (auto& [k, c] : fold_term<typename Symbolic<Key, Less>::Map>(eq, sym)) problem.equations.push_back(c);

  FieldSolveOptions fo;
  fo.height_bound = opts.height;
  fo.max_solutions = opts.max_witnesses == 0 ? 0 : opts.max_witnesses - std::min(opts.max_witnesses, ws.size());
  if (opts.max_witnesses != 0 && fo.max_solutions == 0) fo.max_solutions = 1;
  ++stats.oracle_calls;
  auto res = solve_polynomials(problem, fo);
  for (const auto& pt : res.solutions) {
    Assignment a;
    std::size_t k = 0;
    for (std::size_t v = 0; v < sys.variables.size(); ++v) {
      std::vector<std::pair<Key, Scalar>> terms;
      for (const auto& key : basis[v]) terms.emplace_back(key, pt[k++]);
      a.insert_or_assign(sys.variables[v], build(terms));
    }
    ws.add(a);
  }
  return {res.status, res.truncated};
}

}  // namespace ncd::detail

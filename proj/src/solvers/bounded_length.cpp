#include <stdexcept>

#include "common.hpp"

namespace ncd {

SolveReport solve_bounded_length(const EqSystem& sys, const SolveOptions& opts) {
  if (sys.structure.kind != Structure::Kind::GroupAlgebra)
    throw std::invalid_argument("length mode needs a group algebra system, got " + sys.structure.describe());
  const auto& alg = sys.structure.groupalg;
  const GroupOracle& G = *alg->group;
  std::vector<GroupElement> ball;
  for (auto& g : G.enumerate(opts.bound))
    if (!g.empty()) ball.push_back(std::move(g));

  detail::Symbolic<GroupElement, GroupElementLess> sym;
  sym.unit = G.identity();
  sym.mul_keys = [&G](const GroupElement& a, const GroupElement& b) { return G.multiply(a, b); };
  sym.convert = [](const Element& e, const PolyRingPtr& ring) {
    detail::Symbolic<GroupElement, GroupElementLess>::Map m;
    for (const auto& [g, c] : e.as<GroupAlgElement>().terms()) m.emplace(g, Poly::constant(ring, c));
    return m;
  };
  auto build = [&alg](const std::vector<std::pair<GroupElement, Scalar>>& terms) {
    return Element(GroupAlgElement::from_terms(alg, {terms.begin(), terms.end()}));
  };

  SolveReport r;
  detail::WitnessSet ws(sys);
  bool sat = false, truncated = false;
  const std::size_t n = sys.variables.size();
  // Coefficients may vanish, so only supports that cannot be enlarged within
  // the budget are tried; the identity costs nothing and is always present.
  std::vector<std::vector<GroupElement>> support(n, std::vector<GroupElement>{G.identity()});
  std::vector<std::vector<bool>> chosen(n, std::vector<bool>(ball.size(), false));
  auto maximal = [&](std::size_t budget) {
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t k = 0; k < ball.size(); ++k)
        if (!chosen[v][k] && G.length(ball[k]) <= budget) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t v, std::size_t k, std::size_t budget) -> bool {
    if (v == n) {
      if (!maximal(budget)) return true;
      ++r.stats.patterns;
      auto out = detail::ansatz_solve<GroupElement, GroupElementLess>(sys, alg->field, support, sym, build, opts, ws,
                                                                      r.stats);
      sat = sat || out.status == FieldStatus::Sat;
      truncated = truncated || out.status == FieldStatus::UnknownWithinBound;
      return !ws.full(opts.max_witnesses);
    }
    if (k == ball.size()) return self(self, v + 1, 0, budget);
    const std::size_t len = G.length(ball[k]);
    if (len <= budget) {
      chosen[v][k] = true;
      support[v].push_back(ball[k]);
      bool go_on = self(self, v, k + 1, budget - len);
      support[v].pop_back();
      chosen[v][k] = false;
      if (!go_on) return false;
    }
    return self(self, v, k + 1, budget);
  };
  rec(rec, 0, 0, opts.bound);

  detail::finish(r, ws, opts.max_witnesses);
  r.status = sat ? SolveStatus::Sat : truncated ? SolveStatus::Unknown : SolveStatus::UnsatComplete;
  return r;
}

}  // namespace ncd

#include <set>
#include <stdexcept>

#include "common.hpp"

namespace ncd {

namespace {

void collect_letters(const Term& t, std::set<std::uint32_t>& out) {
  if (t->op == TermNode::Op::Const) {
    for (const auto& [w, c] : t->value->as<NCPoly>().terms()) out.insert(w.begin(), w.end());
    return;
  }
  for (const auto& a : t->args) collect_letters(a, out);
}

// All words over `letters` of length <= m, in shortlex order.
std::vector<Word> monomials(const std::vector<std::uint32_t>& letters, std::size_t m) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= m; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (auto l : letters) {
        Word w = out[k];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

}  // namespace

SolveReport solve_bounded_degree(const EqSystem& sys, const SolveOptions& opts) {
  if (sys.structure.kind != Structure::Kind::FreeAlgebra)
    throw std::invalid_argument("degree mode needs a free algebra system, got " + sys.structure.describe());
  const auto& alg = sys.structure.freealg;
  std::vector<std::uint32_t> letters;
  if (opts.retract) {
    std::set<std::uint32_t> used;
    for (const auto& eq : sys.equations) collect_letters(eq, used);
    letters.assign(used.begin(), used.end());
  } else {
    for (std::uint32_t l = 0; l < alg->letters.size(); ++l) letters.push_back(l);
  }
  const auto words = monomials(letters, opts.bound);
  std::vector<std::vector<Word>> basis(sys.variables.size(), words);

  detail::Symbolic<Word, ShortLex> sym;
  sym.unit = Word{};
  sym.mul_keys = [](const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
  };
  sym.convert = [](const Element& e, const PolyRingPtr& ring) {
    detail::Symbolic<Word, ShortLex>::Map m;
    for (const auto& [w, c] : e.as<NCPoly>().terms()) m.emplace(w, Poly::constant(ring, c));
    return m;
  };
  auto build = [&alg](const std::vector<std::pair<Word, Scalar>>& terms) {
    return Element(NCPoly::from_terms(alg, {terms.begin(), terms.end()}));
  };

  SolveReport r;
  r.stats.patterns = 1;
  detail::WitnessSet ws(sys);
  auto out = detail::ansatz_solve<Word, ShortLex>(sys, alg->field, basis, sym, build, opts, ws, r.stats);
  detail::finish(r, ws, opts.max_witnesses);
  r.status = out.status == FieldStatus::Sat     ? SolveStatus::Sat
             : out.status == FieldStatus::Unsat ? SolveStatus::UnsatComplete
                                                : SolveStatus::Unknown;
  return r;
}

}  // namespace ncd

#include <algorithm>
#include <stdexcept>

#include "common.hpp"
#include "ncdioph/word_equation.hpp"

namespace ncd {

namespace {

// A symbol of a formal monomial: a letter of the free algebra, a constant
// group element (index into a table) or an unknown word W_k.
struct FSym {
  enum Kind : std::uint8_t { Letter, Group, Unknown } kind;
  std::uint32_t index;
  auto operator<=>(const FSym&) const = default;
};
using Formal = std::vector<FSym>;

struct FormalLess {
  bool operator()(const Formal& a, const Formal& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Sym = detail::Symbolic<Formal, FormalLess>;

struct Slot {
  Formal formal;
  Poly coef;
};

class WidthSearch {
 public:
  WidthSearch(const EqSystem& sys, const SolveOptions& opts) : sys_(sys), opts_(opts), ws_(sys) {
    const auto& s = sys.structure;
    group_ = s.kind == Structure::Kind::GroupAlgebra;
    if (!group_ && s.kind != Structure::Kind::FreeAlgebra)
      throw std::invalid_argument("width mode needs a free or group algebra system, got " + s.describe());
    field_ = group_ ? s.groupalg->field : s.freealg->field;
    if (group_) {
      for (auto& g : s.groupalg->group->enumerate(opts.wordlen)) ball_.push_back(std::move(g));
    }
    unknowns_ = sys.variables.size() * opts.bound;
    ring_ = PolyRing::make(field_, detail::coefficient_names(unknowns_));
    expand();
  }

  SolveReport run() {
    classes_.assign(slots_.size(), {});
    search(0, 0);
    detail::finish(report_, ws_, opts_.max_witnesses);
    report_.status = sat_         ? SolveStatus::Sat
                     : truncated_ ? SolveStatus::Unknown
                     : l_binds_ || length_pruned_ ? SolveStatus::UnsatWithinBounds
                                  : SolveStatus::UnsatComplete;
    return report_;
  }

 private:
  void expand() {
    Sym sym;
    sym.ring = ring_;
    sym.unit = Formal{};
    sym.mul_keys = [](const Formal& a, const Formal& b) {
      Formal f = a;
      f.insert(f.end(), b.begin(), b.end());
      return f;
    };
    sym.convert = [this](const Element& e, const PolyRingPtr& ring) {
      Sym::Map m;
      if (group_) {
        for (const auto& [g, c] : e.as<GroupAlgElement>().terms()) {
          Formal f;
          if (!g.empty()) f.push_back({FSym::Group, intern(g)});
          m.emplace(std::move(f), Poly::constant(ring, c));
        }
      } else {
        for (const auto& [w, c] : e.as<NCPoly>().terms()) {
          Formal f;
          for (auto l : w) f.push_back({FSym::Letter, l});
          m.emplace(std::move(f), Poly::constant(ring, c));
        }
      }
      return m;
    };
    for (std::size_t v = 0; v < sys_.variables.size(); ++v) {
      Sym::Map m;
      for (std::size_t i = 0; i < opts_.bound; ++i) {
        const auto k = static_cast<std::uint32_t>(v * opts_.bound + i);
        m.emplace(Formal{{FSym::Unknown, k}}, Poly::variable(ring_, k));
      }
      sym.vars[sys_.variables[v]] = std::move(m);
    }
    for (const auto& eq : sys_.equations) {
      std::vector<Slot> slots;
      for (auto& [f, c] : fold_term<Sym::Map>(eq, sym)) slots.push_back({f, c});
      slots_.push_back(std::move(slots));
    }
  }

  std::uint32_t intern(const GroupElement& g) {
    auto it = std::find(group_consts_.begin(), group_consts_.end(), g);
    if (it != group_consts_.end()) return static_cast<std::uint32_t>(it - group_consts_.begin());
    group_consts_.push_back(g);
    return static_cast<std::uint32_t>(group_consts_.size() - 1);
  }

  // Whether two formal monomials can take the same value: leading and
  // trailing letters agree and the length ranges overlap.
  bool compatible(const Formal& a, const Formal& b) const {
    auto is_w = [](const FSym& s) { return s.kind == FSym::Unknown; };
    const auto wa = std::count_if(a.begin(), a.end(), is_w), wb = std::count_if(b.begin(), b.end(), is_w);
    if (group_) {
      if (wa || wb) return true;
      return evaluate_group(a, {}) == evaluate_group(b, {});
    }
    const std::size_t la = a.size() - static_cast<std::size_t>(wa), lb = b.size() - static_cast<std::size_t>(wb);
    const std::size_t L = opts_.wordlen;
    if (la > lb + L * static_cast<std::size_t>(wb) || lb > la + L * static_cast<std::size_t>(wa)) {
      // Longer unknown words could have closed the gap.
      if ((la > lb && wb) || (lb > la && wa)) length_pruned_ = true;
      return false;
    }
    for (std::size_t p = 0; p < a.size() && p < b.size() && !is_w(a[p]) && !is_w(b[p]); ++p)
      if (a[p] != b[p]) return false;
    for (std::size_t p = 0; p < a.size() && p < b.size(); ++p) {
      const auto& x = a[a.size() - 1 - p];
      const auto& y = b[b.size() - 1 - p];
      if (is_w(x) || is_w(y)) break;
      if (x != y) return false;
    }
    return true;
  }

  GroupElement evaluate_group(const Formal& f, const std::vector<GroupElement>& w) const {
    const GroupOracle& G = *sys_.structure.groupalg->group;
    GroupElement out = G.identity();
    for (const auto& s : f) out = G.multiply(out, s.kind == FSym::Group ? group_consts_[s.index] : w[s.index]);
    return out;
  }

  // Set partitions of the slots of equation e, one slot at a time.
  bool search(std::size_t e, std::size_t s) {
    if (e == slots_.size()) return leaf();
    if (s == slots_[e].size()) return search(e + 1, 0);
    // Deeper levels push classes onto classes_[e], so index afresh each time.
    const Formal& f = slots_[e][s].formal;
    const std::size_t open = classes_[e].size();
    for (std::size_t c = 0; c < open; ++c) {
      const auto& cls = classes_[e][c];
      bool ok = std::all_of(cls.begin(), cls.end(),
                            [&](std::size_t o) { return compatible(slots_[e][o].formal, f); });
      if (!ok) continue;
      classes_[e][c].push_back(s);
      bool go_on = search(e, s + 1);
      classes_[e][c].pop_back();
      if (!go_on) return false;
    }
    classes_[e].push_back({s});
    bool go_on = search(e, s + 1);
    classes_[e].pop_back();
    return go_on;
  }

  bool leaf() {
    ++report_.stats.patterns;
    FieldProblem t{ring_, {}};
    std::vector<std::pair<Formal, Formal>> s_eqs;
    for (std::size_t e = 0; e < slots_.size(); ++e) {
      for (const auto& cls : classes_[e]) {
        Poly sum(ring_);
        for (auto o : cls) sum += slots_[e][o].coef;
        if (!sum.is_zero()) t.equations.push_back(sum);
        for (std::size_t k = 1; k < cls.size(); ++k) s_eqs.emplace_back(slots_[e][cls[0]].formal, slots_[e][cls[k]].formal);
      }
    }
    FieldSolveOptions fo;
    fo.height_bound = opts_.height;
    fo.max_solutions = opts_.max_witnesses == 0 ? 0 : 1;
    ++report_.stats.oracle_calls;
    auto coeffs = solve_polynomials(t, fo);
    if (coeffs.status == FieldStatus::UnknownWithinBound) truncated_ = true;
    if (coeffs.solutions.empty()) return true;

    // Unknown words that the pattern constrains; with a witness cap, the
    // others stay empty.
    std::vector<bool> used(unknowns_, opts_.max_witnesses == 0);
    for (const auto& [a, b] : s_eqs)
      for (const auto* f : {&a, &b})
        for (const auto& sym : *f)
          if (sym.kind == FSym::Unknown) used[sym.index] = true;
    ++report_.stats.oracle_calls;
    auto words = group_ ? solve_group(s_eqs, used) : solve_words(s_eqs, used);
    if (words.empty()) {
      if (std::find(used.begin(), used.end(), true) != used.end()) l_binds_ = true;
      return true;
    }
    for (const auto& w : words) {
      for (const auto& alpha : coeffs.solutions) {
        ws_.add(witness(w, alpha));
        sat_ = true;
        if (ws_.full(opts_.max_witnesses)) return false;
      }
    }
    return true;
  }

  // Values for every unknown (free-algebra words as GroupElement-shaped
  // vectors of letters, group elements otherwise).
  using Values = std::vector<std::vector<int>>;

  std::vector<Values> solve_words(const std::vector<std::pair<Formal, Formal>>& eqs, const std::vector<bool>& used) {
    WordSystem ws;
    ws.alphabet = sys_.structure.freealg->letters;
    std::vector<std::uint32_t> var_of(unknowns_, 0);
    std::vector<std::uint32_t> unknown_of;
    for (std::uint32_t k = 0; k < unknowns_; ++k) {
      if (!used[k]) continue;
      var_of[k] = static_cast<std::uint32_t>(ws.variables.size());
      ws.variables.push_back("w" + std::to_string(k));
      unknown_of.push_back(k);
    }
    auto side = [&](const Formal& f) {
      std::vector<WordSymbol> out;
      for (const auto& s : f) out.push_back(s.kind == FSym::Unknown ? WordSymbol{true, var_of[s.index]}
                                                                    : WordSymbol{false, s.index});
      return out;
    };
    for (const auto& [a, b] : eqs) ws.equations.push_back({side(a), side(b)});
    std::vector<Values> out;
    for (const auto& sol : word_solve(ws, opts_.wordlen)) {
      Values v(unknowns_);
      for (std::size_t j = 0; j < sol.size(); ++j) v[unknown_of[j]].assign(sol[j].begin(), sol[j].end());
      out.push_back(std::move(v));
    }
    return out;
  }

  std::vector<Values> solve_group(const std::vector<std::pair<Formal, Formal>>& eqs, const std::vector<bool>& used) {
    std::vector<Values> out;
    Values cur(unknowns_);
    std::vector<std::uint32_t> order;
    for (std::uint32_t k = 0; k < unknowns_; ++k)
      if (used[k]) order.push_back(k);
    // Equation j can be checked once every unknown in it is assigned.
    auto ready_at = [&](const std::pair<Formal, Formal>& eq) {
      std::size_t last = 0;
      for (const auto* f : {&eq.first, &eq.second})
        for (const auto& s : *f)
          if (s.kind == FSym::Unknown) {
            auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), s.index) - order.begin());
            last = std::max(last, pos + 1);
          }
      return last;
    };
    std::vector<std::vector<std::size_t>> check(order.size() + 1);
    for (std::size_t j = 0; j < eqs.size(); ++j) check[ready_at(eqs[j])].push_back(j);
    auto holds = [&](std::size_t depth) {
      return std::all_of(check[depth].begin(), check[depth].end(), [&](std::size_t j) {
        return evaluate_group(eqs[j].first, cur) == evaluate_group(eqs[j].second, cur);
      });
    };
    auto rec = [&](auto&& self, std::size_t depth) -> void {
      if (!holds(depth)) return;
      if (depth == order.size()) {
        out.push_back(cur);
        return;
      }
      for (const auto& g : ball_) {
        cur[order[depth]] = g;
        self(self, depth + 1);
      }
      cur[order[depth]].clear();
    };
    rec(rec, 0);
    return out;
  }

  Assignment witness(const Values& w, const std::vector<Scalar>& alpha) const {
    Assignment a;
    const auto& s = sys_.structure;
    for (std::size_t v = 0; v < sys_.variables.size(); ++v) {
      if (group_) {
        std::vector<GroupAlgElement::Term> terms;
        for (std::size_t i = 0; i < opts_.bound; ++i) terms.emplace_back(w[v * opts_.bound + i], alpha[v * opts_.bound + i]);
        a.insert_or_assign(sys_.variables[v], Element(GroupAlgElement::from_terms(s.groupalg, std::move(terms))));
      } else {
        std::vector<NCPoly::Term> terms;
        for (std::size_t i = 0; i < opts_.bound; ++i) {
          const auto& letters = w[v * opts_.bound + i];
          terms.emplace_back(Word(letters.begin(), letters.end()), alpha[v * opts_.bound + i]);
        }
        a.insert_or_assign(sys_.variables[v], Element(NCPoly::from_terms(s.freealg, std::move(terms))));
      }
    }
    return a;
  }

  const EqSystem& sys_;
  SolveOptions opts_;
  detail::WitnessSet ws_;
  SolveReport report_;
  bool group_ = false;
  Field field_ = Field::rationals();
  std::vector<GroupElement> ball_;
  std::vector<GroupElement> group_consts_;
  std::size_t unknowns_ = 0;
  PolyRingPtr ring_;
  std::vector<std::vector<Slot>> slots_;
  std::vector<std::vector<std::vector<std::size_t>>> classes_;
  bool sat_ = false, truncated_ = false, l_binds_ = false;
  mutable bool length_pruned_ = false;
};

}  // namespace

SolveReport solve_bounded_width(const EqSystem& sys, const SolveOptions& opts) {
  WidthSearch search(sys, opts);
  return search.run();
}

}  // namespace ncd

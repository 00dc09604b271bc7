#include "ncdioph/field_solve.hpp"

#include <algorithm>
#include <optional>

namespace ncd {

std::string to_string(FieldStatus s) {
  switch (s) {
    case FieldStatus::Sat: return "SAT";
    case FieldStatus::Unsat: return "UNSAT";
    case FieldStatus::UnknownWithinBound: return "UNKNOWN_WITHIN_BOUND";
  }
  return "?";
}

namespace {

// f with t_v replaced by g.
Poly compose_var(const Poly& f, std::size_t v, const Poly& g) {
  Poly out(f.ring());
  std::vector<Poly> powers{Poly::from_int(f.ring(), 1)};
  for (const auto& [e, c] : f.terms()) {
    const auto k = static_cast<std::size_t>(e[v]);
    while (powers.size() <= k) powers.push_back(powers.back() * g);
    Exponents rest = e;
    rest[v] = 0;
    out += Poly::monomial(f.ring(), rest, c) * powers[k];
  }
  return out;
}

std::vector<std::size_t> occurring(const Poly& f) {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < f.ring()->arity(); ++v)
    if (f.degree_in(v) > 0) vars.push_back(v);
  return vars;
}

bool search_less(const Scalar& a, const Scalar& b) {
  mpz_class ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a < b;
}

class Search {
 public:
  Search(const FieldProblem& p, const FieldSolveOptions& o)
      : ring_(p.ring), field_(p.ring->field), opts_(o), values_(p.ring->arity()), eliminated_(p.ring->arity(), false) {}

  FieldSolveResult run(std::vector<Poly> eqs) {
    step(std::move(eqs));
    result_.status = !result_.solutions.empty() ? FieldStatus::Sat
                     : result_.truncated        ? FieldStatus::UnknownWithinBound
                                                : FieldStatus::Unsat;
    return std::move(result_);
  }

 private:
  bool finite() const { return field_.kind == Field::Kind::Prime; }
  bool done() const { return opts_.max_solutions != 0 && result_.solutions.size() >= opts_.max_solutions; }

  std::vector<Scalar> candidates() {
    if (finite()) return field_.enumerate(static_cast<std::uint64_t>(field_.modulus));
    result_.truncated = true;
    return field_.enumerate(opts_.height_bound);
  }

  std::vector<Scalar> roots(const Poly& f, std::size_t v) {
    std::vector<Scalar> out;
    std::vector<Scalar> point(ring_->arity(), Scalar::zero(field_));
    auto is_root = [&](const Scalar& r) {
      point[v] = r;
      return f.evaluate(point).is_zero();
    };
    if (finite()) {
      for (const auto& r : candidates())
        if (is_root(r)) out.push_back(r);
      return out;
    }
    // Nonlinear over an infinite field: never reported as exhaustive.
    result_.truncated = true;
    if (f.degree_in(v) == 2) {
      Exponents e(ring_->arity(), 0);
      e[v] = 2;
      Scalar a = f.coefficient(e);
      e[v] = 1;
      Scalar b = f.coefficient(e);
      e[v] = 0;
      Scalar c = f.coefficient(e);
      if (auto s = (b * b - Scalar::from_int(field_, 4) * a * c).sqrt()) {
        Scalar two_a = a * Scalar::from_int(field_, 2);
        out.push_back((-b + *s) / two_a);
        if (!s->is_zero()) out.push_back((-b - *s) / two_a);
      }
    } else {
      for (const auto& r : field_.enumerate(opts_.height_bound))
        if (is_root(r)) out.push_back(r);
    }
    std::sort(out.begin(), out.end(), search_less);
    return out;
  }

  void assign(const std::vector<Poly>& eqs, std::size_t v, const std::vector<Scalar>& vals) {
    for (const auto& r : vals) {
      if (done()) return;
      values_[v] = r;
      std::vector<Poly> next;
      next.reserve(eqs.size());
      for (const auto& e : eqs) next.push_back(e.substitute(v, r));
      step(std::move(next));
    }
    values_[v].reset();
  }

  void step(std::vector<Poly> eqs) {
    ++result_.nodes;
    if (done()) return;
    std::vector<Poly> live;
    for (auto& e : eqs) {
      if (e.is_zero()) continue;
      if (e.is_constant()) return;
      live.push_back(std::move(e));
    }
    if (live.empty()) {
      finish();
      return;
    }
    // Linear elimination v = -B / A with A a nonzero constant.
    for (std::size_t k = 0; k < live.size(); ++k) {
      for (std::size_t v : occurring(live[k])) {
        if (live[k].degree_in(v) != 1) continue;
        Poly a(ring_), b(ring_);
        for (const auto& [e, c] : live[k].terms()) {
          if (e[v] == 1) {
            Exponents r = e;
            r[v] = 0;
            a += Poly::monomial(ring_, r, c);
          } else {
            b += Poly::monomial(ring_, e, c);
          }
        }
        if (!a.is_constant()) continue;
        Poly expr = -b * a.constant_term().inverse();
        std::vector<Poly> next;
        for (std::size_t j = 0; j < live.size(); ++j)
          if (j != k) next.push_back(compose_var(live[j], v, expr));
        eliminated_[v] = true;
        elims_.emplace_back(v, expr);
        step(std::move(next));
        elims_.pop_back();
        eliminated_[v] = false;
        return;
      }
    }
    for (const auto& e : live) {
      auto vars = occurring(e);
      if (vars.size() == 1) {
        assign(live, vars[0], roots(e, vars[0]));
        return;
      }
    }
    std::size_t v = ring_->arity();
    for (const auto& e : live) v = std::min(v, occurring(e).front());
    assign(live, v, candidates());
  }

  void finish() {
    std::vector<std::size_t> free;
    for (std::size_t v = 0; v < ring_->arity(); ++v)
      if (!values_[v] && !eliminated_[v]) free.push_back(v);
    if (free.empty() || opts_.max_solutions == 1) {
      for (auto v : free) values_[v] = Scalar::zero(field_);
      emit();
      for (auto v : free) values_[v].reset();
      return;
    }
    const auto cands = candidates();
    std::vector<std::size_t> idx(free.size(), 0);
    while (!done()) {
      for (std::size_t k = 0; k < free.size(); ++k) values_[free[k]] = cands[idx[k]];
      emit();
      std::size_t k = free.size();
      while (k > 0 && ++idx[k - 1] == cands.size()) idx[--k] = 0;
      if (k == 0) break;
    }
    for (auto v : free) values_[v].reset();
  }

  void emit() {
    std::vector<Scalar> point(ring_->arity(), Scalar::zero(field_));
    for (std::size_t v = 0; v < point.size(); ++v)
      if (values_[v]) point[v] = *values_[v];
    for (auto it = elims_.rbegin(); it != elims_.rend(); ++it) point[it->first] = it->second.evaluate(point);
    result_.solutions.push_back(std::move(point));
  }

  PolyRingPtr ring_;
  Field field_;
  FieldSolveOptions opts_;
  std::vector<std::optional<Scalar>> values_;
  std::vector<bool> eliminated_;
  std::vector<std::pair<std::size_t, Poly>> elims_;
  FieldSolveResult result_;
};

}  // namespace

FieldSolveResult solve_polynomials(const FieldProblem& problem, const FieldSolveOptions& opts) {
  if (problem.ring->laurent) throw std::invalid_argument("field systems use ordinary polynomials");
  for (const auto& e : problem.equations)
    if (!(*e.ring() == *problem.ring)) throw StructureMismatch("equation over a different ring");
  return Search(problem, opts).run(problem.equations);
}

}  // namespace ncd

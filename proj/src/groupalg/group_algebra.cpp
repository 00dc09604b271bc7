#include "ncdioph/group_algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace ncd {

GroupAlgebraPtr GroupAlgebra::make(Field f, GroupOraclePtr g) {
  return std::make_shared<const GroupAlgebra>(GroupAlgebra{f, std::move(g)});
}

std::string GroupAlgebra::describe() const { return "groupalg(" + field.name() + "; " + group->describe() + ")"; }

bool GroupAlgebra::operator==(const GroupAlgebra& o) const {
  if (!(field == o.field)) return false;
  if (group == o.group) return true;
  return group->describe() == o.group->describe() && group->generator_names() == o.group->generator_names();
}

namespace {

using Accumulator = std::map<GroupElement, Scalar, GroupElementLess>;

void accumulate(Accumulator& acc, const GroupElement& g, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

GroupAlgElement GroupAlgElement::constant(GroupAlgebraPtr alg, const Scalar& c) {
  return element(std::move(alg), {}, c);
}

GroupAlgElement GroupAlgElement::from_int(GroupAlgebraPtr alg, long n) {
  Field f = alg->field;
  return constant(std::move(alg), Scalar::from_int(f, n));
}

GroupAlgElement GroupAlgElement::element(GroupAlgebraPtr alg, const GroupElement& g, const Scalar& c) {
  return from_terms(std::move(alg), {{g, c}});
}

GroupAlgElement GroupAlgElement::element(GroupAlgebraPtr alg, const GroupElement& g) {
  Field f = alg->field;
  return element(std::move(alg), g, Scalar::one(f));
}

GroupAlgElement GroupAlgElement::from_terms(GroupAlgebraPtr alg, std::vector<Term> terms) {
  Accumulator acc;
  for (const auto& [g, c] : terms) {
    if (!(c.field() == alg->field)) throw StructureMismatch("coefficient field mismatch");
    accumulate(acc, alg->group->normalize(g), c);
  }
  GroupAlgElement u(std::move(alg));
  u.terms_.assign(acc.begin(), acc.end());
  return u;
}

void GroupAlgElement::check_algebra(const GroupAlgElement& o) const {
  if (alg_ != o.alg_ && !(*alg_ == *o.alg_))
    throw StructureMismatch("group algebra mismatch: " + alg_->describe() + " vs " + o.alg_->describe());
}

std::size_t GroupAlgElement::total_length() const {
  std::size_t n = 0;
  for (const auto& [g, c] : terms_) n += g.size();
  return n;
}

Scalar GroupAlgElement::coefficient(const GroupElement& g0) const {
  const GroupElement g = group().normalize(g0);
  for (const auto& [h, c] : terms_)
    if (h == g) return c;
  return Scalar::zero(field());
}

GroupAlgElement GroupAlgElement::operator+(const GroupAlgElement& o) const {
  check_algebra(o);
  Accumulator acc(terms_.begin(), terms_.end());
  for (const auto& [g, c] : o.terms_) accumulate(acc, g, c);
  GroupAlgElement r(alg_);
  r.terms_.assign(acc.begin(), acc.end());
  return r;
}

GroupAlgElement GroupAlgElement::operator-() const {
  GroupAlgElement r(alg_);
  for (const auto& [g, c] : terms_) r.terms_.emplace_back(g, -c);
  return r;
}

GroupAlgElement GroupAlgElement::operator-(const GroupAlgElement& o) const { return *this + (-o); }

GroupAlgElement GroupAlgElement::operator*(const Scalar& c) const {
  GroupAlgElement r(alg_);
  if (c.is_zero()) return r;
  for (const auto& [g, x] : terms_) r.terms_.emplace_back(g, x * c);
  return r;
}

GroupAlgElement GroupAlgElement::operator*(const GroupAlgElement& o) const {
  check_algebra(o);
  Accumulator acc;
  for (const auto& [g, a] : terms_)
    for (const auto& [h, b] : o.terms_) accumulate(acc, group().multiply(g, h), a * b);
  GroupAlgElement r(alg_);
  r.terms_.assign(acc.begin(), acc.end());
  return r;
}

GroupAlgElement GroupAlgElement::pow(unsigned e) const {
  GroupAlgElement result = from_int(alg_, 1);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

bool GroupAlgElement::operator==(const GroupAlgElement& o) const {
  if (alg_ != o.alg_ && !(*alg_ == *o.alg_)) return false;
  return terms_ == o.terms_;
}

std::string GroupAlgElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [g, c] = *it;
    std::string coef = c.to_string();
    bool negative = coef[0] == '-' && coef.find_first_of("+-", 1) == std::string::npos;
    if (negative) coef.erase(0, 1);
    if (coef.find_first_of("+-", 1) != std::string::npos) coef = "(" + coef + ")";
    std::string body;
    if (g.empty())
      body = coef;
    else if (coef == "1")
      body = group().to_string(g);
    else
      body = coef + "*" + group().to_string(g);
    if (first)
      out += negative ? "-" + body : body;
    else
      out += negative ? " - " + body : " + " + body;
    first = false;
  }
  return out;
}

bool GroupAlgElement::is_compound() const {
  if (terms_.size() > 1) return true;
  return to_string().find_first_of("+-") != std::string::npos;
}

std::optional<GroupAlgElement> unit_inverse(const GroupAlgElement& u) {
  if (u.width() != 1) return std::nullopt;
  const auto& [g, c] = u.terms()[0];
  return GroupAlgElement::element(u.algebra(), u.group().invert(g), c.inverse());
}

bool commutes_in_algebra(const GroupAlgElement& u, const GroupElement& g) {
  GroupAlgElement ge = GroupAlgElement::element(u.algebra(), g);
  return (u * ge - ge * u).is_zero();
}

CentralizerReport centralizer_support_check(const GroupAlgebraPtr& alg, const GroupElement& g0, std::size_t m) {
  const GroupOracle& G = *alg->group;
  const GroupElement g = G.normalize(g0);
  CentralizerReport report;
  report.hypotheses_verified = G.centralizer_basis(g).has_value();

  const auto ball = G.enumerate(m);
  std::vector<GroupElement> nontrivial;
  for (const auto& h : ball) {
    if (G.commutes(h, g)) report.commuting_support.push_back(h);
    if (!h.empty()) nontrivial.push_back(h);
  }

  const std::vector<Scalar> coeffs = {Scalar::from_int(alg->field, 1), Scalar::from_int(alg->field, -1),
                                      Scalar::from_int(alg->field, 2)};
  std::vector<GroupElement> support;
  auto check_support = [&]() {
    bool expected = std::all_of(support.begin(), support.end(), [&](const auto& h) { return G.commutes(h, g); });
    std::vector<std::size_t> idx(support.size(), 0);
    while (true) {
      std::vector<GroupAlgElement::Term> terms;
      for (std::size_t k = 0; k < support.size(); ++k) terms.emplace_back(support[k], coeffs[idx[k]]);
      auto u = GroupAlgElement::from_terms(alg, terms);
      ++report.supports_checked;
      if (commutes_in_algebra(u, g) != expected) ++report.disagreements;
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == coeffs.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  };
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t budget) {
    if (!support.empty()) {
      check_support();
      support.push_back({});
      check_support();
      support.pop_back();
    }
    for (std::size_t i = start; i < nontrivial.size(); ++i) {
      if (nontrivial[i].size() > budget) continue;
      support.push_back(nontrivial[i]);
      extend(i + 1, budget - nontrivial[i].size());
      support.pop_back();
    }
  };
  support.push_back({});
  check_support();
  support.clear();
  extend(0, m);
  return report;
}

Poly laurent_iso(const GroupAlgElement& u, const std::vector<GroupElement>& basis, const PolyRingPtr& ring) {
  if (!ring->laurent || ring->arity() != basis.size())
    throw std::invalid_argument("laurent_iso needs a Laurent ring with one variable per basis element");
  Poly out(ring);
  for (const auto& [g, c] : u.terms()) {
    auto e = decompose_in_basis(u.group(), g, basis);
    if (!e) throw std::invalid_argument("support element " + u.group().to_string(g) + " is outside the centralizer");
    out += Poly::monomial(ring, Exponents(e->begin(), e->end()), c);
  }
  return out;
}

GroupAlgElement laurent_iso_inverse(const Poly& f, const GroupAlgebraPtr& alg, const std::vector<GroupElement>& basis) {
  if (f.ring()->arity() != basis.size()) throw std::invalid_argument("arity does not match the basis size");
  const GroupOracle& G = *alg->group;
  std::vector<GroupAlgElement::Term> terms;
  for (const auto& [e, c] : f.terms()) {
    GroupElement g;
    for (std::size_t j = 0; j < basis.size(); ++j) g = G.multiply(g, G.power(basis[j], e[j]));
    terms.emplace_back(std::move(g), c);
  }
  return GroupAlgElement::from_terms(alg, std::move(terms));
}

}  // namespace ncd

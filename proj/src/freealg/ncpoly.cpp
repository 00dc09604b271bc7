#include "ncdioph/ncpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncd {

FreeAlgebraPtr FreeAlgebra::make(Field f, std::vector<std::string> letters) {
  return std::make_shared<const FreeAlgebra>(FreeAlgebra{f, std::move(letters)});
}

std::optional<std::uint32_t> FreeAlgebra::index_of(const std::string& letter) const {
  auto it = std::find(letters.begin(), letters.end(), letter);
  if (it == letters.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - letters.begin());
}

std::string FreeAlgebra::describe() const {
  std::string out = "freealg(" + field.name() + "; ";
  for (std::size_t i = 0; i < letters.size(); ++i) out += (i ? ", " : "") + letters[i];
  return out + ")";
}

std::string word_to_string(const FreeAlgebra& alg, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += alg.letters[w[i]];
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

using Accumulator = std::map<Word, Scalar, ShortLex>;

void accumulate(Accumulator& acc, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

NCPoly NCPoly::constant(FreeAlgebraPtr alg, const Scalar& c) { return monomial(std::move(alg), {}, c); }

NCPoly NCPoly::from_int(FreeAlgebraPtr alg, long n) {
  Field f = alg->field;
  return constant(std::move(alg), Scalar::from_int(f, n));
}

NCPoly NCPoly::generator(FreeAlgebraPtr alg, std::uint32_t index) {
  if (index >= alg->letters.size()) throw std::out_of_range("generator index out of range");
  Field f = alg->field;
  return monomial(std::move(alg), {index}, Scalar::one(f));
}

NCPoly NCPoly::monomial(FreeAlgebraPtr alg, Word w, const Scalar& c) {
  return from_terms(std::move(alg), {{std::move(w), c}});
}

NCPoly NCPoly::from_terms(FreeAlgebraPtr alg, std::vector<Term> terms) {
  Accumulator acc;
  for (auto& [w, c] : terms) {
    if (!(c.field() == alg->field)) throw StructureMismatch("coefficient field mismatch");
    for (auto letter : w)
      if (letter >= alg->letters.size()) throw std::out_of_range("letter outside the alphabet");
    accumulate(acc, w, c);
  }
  NCPoly p(std::move(alg));
  p.terms_.assign(acc.begin(), acc.end());
  return p;
}

void NCPoly::check_algebra(const NCPoly& o) const {
  if (alg_ != o.alg_ && !(*alg_ == *o.alg_))
    throw StructureMismatch("free algebra mismatch: " + alg_->describe() + " vs " + o.alg_->describe());
}

Scalar NCPoly::coefficient(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& x) { return ShortLex{}(t.first, x); });
  if (it != terms_.end() && it->first == w) return it->second;
  return Scalar::zero(field());
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  check_algebra(o);
  NCPoly r(alg_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && ShortLex{}(a->first, b->first))) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || ShortLex{}(b->first, a->first)) {
      r.terms_.push_back(*b++);
    } else {
      Scalar c = a->second + b->second;
      if (!c.is_zero()) r.terms_.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r(alg_);
  r.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) r.terms_.emplace_back(w, -c);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator*(const Scalar& c) const {
  NCPoly r(alg_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace_back(w, x * c);
  return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  check_algebra(o);
  Accumulator acc;
  Word w;
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : o.terms_) {
      w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      accumulate(acc, w, ca * cb);
    }
  }
  NCPoly r(alg_);
  r.terms_.assign(acc.begin(), acc.end());
  return r;
}

NCPoly NCPoly::pow(unsigned e) const {
  NCPoly result = from_int(alg_, 1);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

bool NCPoly::operator==(const NCPoly& o) const {
  if (alg_ != o.alg_ && !(*alg_ == *o.alg_)) return false;
  return terms_ == o.terms_;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    std::string coef = c.to_string();
    bool negative = coef[0] == '-' && coef.find_first_of("+-", 1) == std::string::npos;
    if (negative) coef.erase(0, 1);
    bool compound = coef.find_first_of("+-", 1) != std::string::npos;
    if (compound) coef = "(" + coef + ")";
    std::string body;
    if (w.empty())
      body = coef;
    else if (coef == "1")
      body = word_to_string(*alg_, w);
    else
      body = coef + "*" + word_to_string(*alg_, w);
    if (first)
      out += negative ? "-" + body : body;
    else
      out += negative ? " - " + body : " + " + body;
    first = false;
  }
  return out;
}

bool NCPoly::is_compound() const {
  if (terms_.size() > 1) return true;
  return to_string().find_first_of("+-") != std::string::npos;
}

std::optional<NCPoly> unit_inverse(const NCPoly& f) {
  if (f.width() != 1 || !f.terms()[0].first.empty()) return std::nullopt;
  return NCPoly::constant(f.algebra(), f.terms()[0].second.inverse());
}

NCPoly retract(const NCPoly& f, const std::vector<std::uint32_t>& kept) {
  std::vector<std::string> names;
  for (auto i : kept) names.push_back(f.algebra()->letters.at(i));
  return retract(f, FreeAlgebra::make(f.field(), std::move(names)), kept);
}

NCPoly retract(const NCPoly& f, const FreeAlgebraPtr& target, const std::vector<std::uint32_t>& kept) {
  if (target->letters.size() != kept.size()) throw std::invalid_argument("retract target alphabet size mismatch");
  std::vector<std::int64_t> remap(f.algebra()->letters.size(), -1);
  for (std::size_t j = 0; j < kept.size(); ++j) remap.at(kept[j]) = static_cast<std::int64_t>(j);
  std::vector<NCPoly::Term> out;
  for (const auto& [w, c] : f.terms()) {
    Word mapped;
    bool survives = true;
    for (auto letter : w) {
      if (remap[letter] < 0) {
        survives = false;
        break;
      }
      mapped.push_back(static_cast<std::uint32_t>(remap[letter]));
    }
    if (survives) out.emplace_back(std::move(mapped), c);
  }
  return NCPoly::from_terms(target, std::move(out));
}

NCPoly embed(const NCPoly& f, const FreeAlgebraPtr& super, const std::vector<std::uint32_t>& index_map) {
  std::vector<NCPoly::Term> out;
  for (const auto& [w, c] : f.terms()) {
    Word mapped;
    for (auto letter : w) mapped.push_back(index_map.at(letter));
    out.emplace_back(std::move(mapped), c);
  }
  return NCPoly::from_terms(super, std::move(out));
}

NCPoly disjoin(const NCPoly& p1, const NCPoly& p2) { return p1 * p2; }

NCPoly conjoin(const NCPoly& p1, const NCPoly& p2, const NCPoly& a) {
  if (a.width() != 1 || a.terms()[0].first.size() != 1 || !a.terms()[0].second.is_one())
    throw std::invalid_argument("conjoin needs a free generator, got " + a.to_string());
  return p1 * p1 + a * p2 * p2;
}

}  // namespace ncd

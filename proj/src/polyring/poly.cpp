#include "ncdioph/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ncd {

PolyRingPtr PolyRing::make(Field f, std::vector<std::string> vars, bool laurent) {
  return std::make_shared<const PolyRing>(PolyRing{f, std::move(vars), laurent});
}

std::string PolyRing::describe() const {
  std::string out = laurent ? "laurent(" : "poly(";
  out += field.name() + "; ";
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? ", " : "") + vars[i];
  return out + ")";
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

Poly Poly::constant(PolyRingPtr ring, const Scalar& c) {
  return monomial(ring, Exponents(ring->arity(), 0), c);
}

Poly Poly::from_int(PolyRingPtr ring, long n) {
  Field f = ring->field;
  return constant(std::move(ring), Scalar::from_int(f, n));
}

Poly Poly::variable(PolyRingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw std::out_of_range("variable index out of range");
  Exponents e(ring->arity(), 0);
  e[index] = 1;
  Field f = ring->field;
  return monomial(std::move(ring), std::move(e), Scalar::one(f));
}

Poly Poly::monomial(PolyRingPtr ring, Exponents e, const Scalar& c) {
  if (e.size() != ring->arity()) throw std::invalid_argument("exponent vector length mismatch");
  if (!ring->laurent && std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
    throw StructureMismatch("negative exponent outside a Laurent ring");
  if (!(c.field() == ring->field)) throw StructureMismatch("coefficient field mismatch");
  Poly p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

void Poly::check_ring(const Poly& o) const {
  if (ring_ == o.ring_) return;
  if (ring_->laurent != o.ring_->laurent)
    throw StructureMismatch("mixing Laurent and ordinary polynomials requires an explicit cast");
  if (!(*ring_ == *o.ring_))
    throw StructureMismatch("polynomial ring mismatch: " + ring_->describe() + " vs " + o.ring_->describe());
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Scalar Poly::constant_term() const { return coefficient(Exponents(ring_->arity(), 0)); }

Scalar Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field()) : it->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int Poly::degree_in(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var] > d) d = e[var];
    first = false;
  }
  return d;
}

int Poly::min_degree_in(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var] < d) d = e[var];
    first = false;
  }
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  check_ring(o);
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

Poly Poly::operator*(const Scalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, x * c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_ring(o);
  // Accumulate raw real and imaginary parts; residues are reduced once at
  // the end.
  const Field& f = ring_->field;
  const bool gaussian = f.has_i();
  std::map<Exponents, std::pair<mpq_class, mpq_class>, GrlexLess> acc;
  const std::size_t n = ring_->arity();
  Exponents e(n);
  mpq_class prod;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      auto& [re, im] = acc[e];
      prod = ca.real() * cb.real();
      re += prod;
      if (gaussian) {
        prod = ca.imag() * cb.imag();
        re -= prod;
        prod = ca.real() * cb.imag();
        im += prod;
        prod = ca.imag() * cb.real();
        im += prod;
      }
    }
  }
  Poly r(ring_);
  for (auto& [ex, c] : acc) {
    Scalar s = gaussian ? Scalar::gaussian(f, c.first, c.second) : Scalar::rational(f, c.first);
    if (!s.is_zero()) r.terms_.emplace_hint(r.terms_.end(), ex, std::move(s));
  }
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = from_int(ring_, 1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::optional<Poly> Poly::unit_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  if (!is_const && !ring_->laurent) return std::nullopt;
  Exponents inv(e.size());
  std::transform(e.begin(), e.end(), inv.begin(), [](int x) { return -x; });
  return monomial(ring_, inv, c.inverse());
}

Poly Poly::pow_signed(long e) const {
  if (e >= 0) return pow(static_cast<unsigned>(e));
  auto inv = unit_inverse();
  if (!inv) throw std::domain_error("negative power of a non-unit: " + to_string());
  return inv->pow(static_cast<unsigned>(-e));
}

bool Poly::operator==(const Poly& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) return false;
  return terms_ == o.terms_;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != ring_->arity()) throw std::invalid_argument("evaluation point has wrong arity");
  Scalar sum = Scalar::zero(field());
  for (const auto& [e, c] : terms_) {
    Scalar m = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0)
        m *= point[i].pow(static_cast<std::uint64_t>(e[i]));
      else if (e[i] < 0)
        m *= point[i].inverse().pow(static_cast<std::uint64_t>(-e[i]));
    }
    sum += m;
  }
  return sum;
}

Poly Poly::substitute(std::size_t var, const Scalar& value) const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    int k = f[var];
    f[var] = 0;
    Scalar factor = k >= 0 ? value.pow(static_cast<std::uint64_t>(k)) : value.inverse().pow(static_cast<std::uint64_t>(-k));
    r.add_term(f, c * factor);
  }
  return r;
}

std::pair<Poly, Poly> Poly::divide_by_linear(std::size_t var, const Scalar& c) const {
  Poly quotient(ring_), remainder(ring_);
  for (const auto& [e, coef] : terms_) {
    const int k = e[var];
    Exponents rest = e;
    rest[var] = 0;
    if (k == 0) {
      remainder.add_term(rest, coef);
      continue;
    }
    if (k < 0 && c.is_zero()) throw std::domain_error("division by t at a negative exponent");
    Scalar ck = k > 0 ? c.pow(static_cast<std::uint64_t>(k)) : c.inverse().pow(static_cast<std::uint64_t>(-k));
    remainder.add_term(rest, coef * ck);
    if (k > 0) {
      // (t^k - c^k)/(t - c) = sum_{i<k} c^{k-1-i} t^i
      for (int i = 0; i < k; ++i) {
        Exponents q = rest;
        q[var] = i;
        quotient.add_term(q, coef * c.pow(static_cast<std::uint64_t>(k - 1 - i)));
      }
    } else {
      // (t^{-m} - c^{-m})/(t - c) = -sum_{i<m} c^{-1-i} t^{i-m}
      const int m = -k;
      Scalar cinv = c.inverse();
      for (int i = 0; i < m; ++i) {
        Exponents q = rest;
        q[var] = i - m;
        quotient.add_term(q, -(coef * cinv.pow(static_cast<std::uint64_t>(i + 1))));
      }
    }
  }
  return {quotient, remainder};
}

std::optional<Poly> Poly::sqrt() const {
  if (ring_->arity() != 1) throw std::invalid_argument("sqrt is only implemented for one variable");
  if (is_zero()) return *this;
  const int lo = min_degree_in(0), hi = degree_in(0);
  if (lo % 2 != 0 || hi % 2 != 0) return std::nullopt;
  if (!ring_->laurent && lo < 0) return std::nullopt;
  auto lead = terms_.rbegin()->second.sqrt();
  if (!lead) return std::nullopt;
  Scalar two_lead = *lead + *lead;
  if (two_lead.is_zero()) return std::nullopt;
  Poly root = monomial(ring_, {hi / 2}, *lead);
  for (int step = 0; step <= (hi - lo) / 2 + 1; ++step) {
    Poly rem = *this - root * root;
    if (rem.is_zero()) return root;
    const auto& [e, c] = *rem.terms_.rbegin();
    const int k = e[0] - hi / 2;
    if (k < lo / 2 || k >= hi / 2) return std::nullopt;
    root += monomial(ring_, {k}, c / two_lead);
  }
  return std::nullopt;
}

Poly Poly::to_laurent() const {
  if (ring_->laurent) return *this;
  return rebind(PolyRing::make(ring_->field, ring_->vars, true));
}

Poly Poly::to_polynomial() const {
  if (!ring_->laurent) return *this;
  for (const auto& [e, c] : terms_)
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
      throw StructureMismatch("negative exponent in " + to_string() + " has no polynomial image");
  return rebind(PolyRing::make(ring_->field, ring_->vars, false));
}

Poly Poly::rebind(PolyRingPtr ring) const {
  if (ring->arity() != ring_->arity() || !(ring->field == ring_->field))
    throw StructureMismatch("rebind to an incompatible ring");
  Poly r(std::move(ring));
  for (const auto& [e, c] : terms_) {
    if (!r.ring_->laurent && std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
      throw StructureMismatch("negative exponent outside a Laurent ring");
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

namespace {

std::string monomial_string(const PolyRing& ring, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.vars[i];
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_string(*ring_, e);
    std::string coef = c.to_string();
    bool negative = coef[0] == '-' && coef.find_first_of("+-", 1) == std::string::npos;
    if (negative) coef.erase(0, 1);
    bool compound = coef.find_first_of("+-", 1) != std::string::npos;
    std::string body;
    if (mono.empty())
      body = compound ? "(" + coef + ")" : coef;
    else if (coef == "1")
      body = mono;
    else
      body = (compound ? "(" + coef + ")" : coef) + "*" + mono;
    if (first)
      out += negative ? "-" + body : body;
    else
      out += negative ? " - " + body : " + " + body;
    first = false;
  }
  return out;
}

bool Poly::is_compound() const {
  if (terms_.size() > 1) return true;
  std::string s = to_string();
  return s.find_first_of("+-") != std::string::npos;
}

}  // namespace ncd

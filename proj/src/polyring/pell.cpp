#include "ncdioph/pell.hpp"

#include <stdexcept>

namespace ncd {

namespace {

void require_univariate(const PolyRingPtr& ring) {
  if (ring->arity() != 1) throw std::invalid_argument("expected a one-variable ring, got " + ring->describe());
}

Poly t_squared_minus_one(const PolyRingPtr& ring) {
  Poly t = Poly::variable(ring, 0);
  return t * t - Poly::from_int(ring, 1);
}

}  // namespace

std::vector<Poly> chebyshev_sequence(ChebyshevKind kind, long n_max, const PolyRingPtr& ring) {
  require_univariate(ring);
  std::vector<Poly> seq;
  if (n_max < 0) return seq;
  const Poly t = Poly::variable(ring, 0);
  const Poly two_t = t * Scalar::from_int(ring->field, 2);
  seq.reserve(static_cast<std::size_t>(n_max) + 1);
  seq.push_back(Poly::from_int(ring, 1));
  if (n_max >= 1) seq.push_back(kind == ChebyshevKind::First ? t : two_t);
  for (long k = 2; k <= n_max; ++k) {
    const auto i = static_cast<std::size_t>(k);
    seq.push_back(two_t * seq[i - 1] - seq[i - 2]);
  }
  return seq;
}

Poly chebyshev(ChebyshevKind kind, long n, const PolyRingPtr& ring) {
  require_univariate(ring);
  if (n == -1 && kind == ChebyshevKind::Second) return Poly(ring);
  if (n < 0) throw std::invalid_argument("Chebyshev index must be non-negative");
  return chebyshev_sequence(kind, n, ring).back();
}

bool pell_check(const Poly& x, const Poly& y) {
  require_univariate(x.ring());
  const Poly lhs = x * x - t_squared_minus_one(x.ring()) * y * y;
  return lhs == Poly::from_int(x.ring(), 1);
}

PellEnumeration pell_enumerate(long n_max, const PolyRingPtr& ring) {
  PellEnumeration out;
  out.complete = ring->field.characteristic() == 0;
  if (n_max < 0) return out;
  auto T = chebyshev_sequence(ChebyshevKind::First, n_max, ring);
  auto U = chebyshev_sequence(ChebyshevKind::Second, n_max - 1, ring);
  for (long n = 0; n <= n_max; ++n) {
    const Poly& x = T[static_cast<std::size_t>(n)];
    const Poly y = n == 0 ? Poly(ring) : U[static_cast<std::size_t>(n - 1)];
    for (int sx : {1, -1}) {
      for (int sy : {1, -1}) {
        PellPair pair{sx > 0 ? x : -x, sy > 0 ? y : -y};
        bool seen = false;
        for (const auto& p : out.pairs) seen = seen || (p.x == pair.x && p.y == pair.y);
        if (!seen) out.pairs.push_back(std::move(pair));
      }
    }
  }
  return out;
}

QuadExtElement QuadExtElement::operator*(const QuadExtElement& o) const {
  const Poly d = t_squared_minus_one(p_.ring());
  return {p_ * o.p_ + d * q_ * o.q_, p_ * o.q_ + o.p_ * q_};
}

QuadExtElement QuadExtElement::pow(unsigned e) const {
  QuadExtElement result{Poly::from_int(p_.ring(), 1), Poly(p_.ring())};
  QuadExtElement base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

PellPair laurent_pell_family(unsigned m, unsigned n, int eps, int delta, const PolyRingPtr& ring) {
  require_univariate(ring);
  if ((eps != 1 && eps != -1) || (delta != 1 && delta != -1))
    throw std::invalid_argument("signs must be +1 or -1");
  if (n > 0 && (!ring->laurent || !ring->field.has_i()))
    throw std::invalid_argument("families with n > 0 require i in the coefficient field and a Laurent ring");
  const Field& f = ring->field;
  const Poly t = Poly::variable(ring, 0);
  QuadExtElement value = QuadExtElement{t, Poly::from_int(ring, eps)}.pow(m);
  if (n > 0) {
    const Poly t_inv = *t.unit_inverse();
    const Scalar minus_delta_i = Scalar::imaginary_unit(f) * Scalar::from_int(f, -delta);
    value = value * QuadExtElement{t_inv, t_inv * minus_delta_i}.pow(n);
  }
  return {value.p(), value.q()};
}

std::optional<Poly> value_at_one_equiv(const Poly& f, const Poly& g) {
  require_univariate(f.ring());
  const Poly diff = f - g;
  auto [quotient, remainder] = diff.divide_by_linear(0, Scalar::one(f.field()));
  if (!remainder.is_zero()) return std::nullopt;
  return quotient;
}

std::optional<std::vector<Poly>> ideal_membership_t2_tn(const Poly& f) {
  const auto& ring = f.ring();
  const std::size_t n = ring->arity();
  if (n < 2) throw std::invalid_argument("ideal <t2..tn> needs at least two variables");
  std::vector<Poly> z(n - 1, Poly(ring));
  for (const auto& [e, c] : f.terms()) {
    std::size_t j = 1;
    while (j < n && e[j] <= 0) ++j;
    if (j == n) return std::nullopt;
    Exponents q = e;
    q[j] -= 1;
    z[j - 1] += Poly::monomial(ring, q, c);
  }
  return z;
}

std::optional<std::vector<Poly>> ideal_membership_shifted(const Poly& f) {
  const auto& ring = f.ring();
  const std::size_t n = ring->arity();
  if (n < 2) throw std::invalid_argument("ideal <t2-1..tn-1> needs at least two variables");
  std::vector<Poly> z;
  Poly rest = f;
  for (std::size_t j = 1; j < n; ++j) {
    auto [quotient, remainder] = rest.divide_by_linear(j, Scalar::one(f.field()));
    z.push_back(std::move(quotient));
    rest = std::move(remainder);
  }
  if (!rest.is_zero()) return std::nullopt;
  return z;
}

}  // namespace ncd

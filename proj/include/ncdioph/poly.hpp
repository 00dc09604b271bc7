#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncdioph/scalar.hpp"

namespace ncd {

/// K[t1..tn] or, with laurent = true, K[t1^{±1}..tn^{±1}].
struct PolyRing {
  Field field;
  std::vector<std::string> vars;
  bool laurent = false;

  static std::shared_ptr<const PolyRing> make(Field f, std::vector<std::string> vars, bool laurent = false);
  std::size_t arity() const { return vars.size(); }
  /// Grammar descriptor, e.g. "poly(Q; t)" or "laurent(Qi; t1, t2)".
  std::string describe() const;
  bool operator==(const PolyRing&) const = default;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;
using Exponents = std::vector<int>;

/// Graded lexicographic order on exponent vectors.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Commutative (Laurent) polynomial with exact coefficients. Zero
/// coefficients are never stored; iteration is in ascending grlex order.
class Poly {
 public:
  using Terms = std::map<Exponents, Scalar, GrlexLess>;

  explicit Poly(PolyRingPtr ring) : ring_(std::move(ring)) {}
  static Poly constant(PolyRingPtr ring, const Scalar& c);
  static Poly from_int(PolyRingPtr ring, long n);
  static Poly variable(PolyRingPtr ring, std::size_t index);
  /// c * prod t_j^{e_j}; negative exponents need a Laurent ring.
  static Poly monomial(PolyRingPtr ring, Exponents e, const Scalar& c);

  const PolyRingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Exponents& e) const;

  /// Highest total degree (0 for the zero polynomial).
  int total_degree() const;
  int degree_in(std::size_t var) const;
  int min_degree_in(std::size_t var) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Scalar& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly pow(unsigned e) const;
  /// Negative powers; only for Laurent monomials.
  Poly pow_signed(long e) const;
  /// Inverse of a unit (nonzero scalar times monomial in a Laurent ring, nonzero scalar otherwise).
  std::optional<Poly> unit_inverse() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Scalar evaluate(const std::vector<Scalar>& point) const;
  /// Substitute t_var := value, keeping the same ring.
  Poly substitute(std::size_t var, const Scalar& value) const;

  /// f = (t_var - c) * quotient + f|_{t_var = c}. For c = 0 the variable may
  /// not carry negative exponents.
  std::pair<Poly, Poly> divide_by_linear(std::size_t var, const Scalar& c) const;

  /// Square root in a one-variable (Laurent) ring, if f is a perfect square.
  std::optional<Poly> sqrt() const;

  /// Explicit ring changes; to_polynomial throws if a negative exponent occurs.
  Poly to_laurent() const;
  Poly to_polynomial() const;
  /// Same terms over a different ring with identical arity and field.
  Poly rebind(PolyRingPtr ring) const;

  /// Descending-order rendering in the equation grammar, e.g. "4*t^3 - 3*t".
  std::string to_string() const;
  bool is_compound() const;

 private:
  void check_ring(const Poly& o) const;
  void add_term(const Exponents& e, const Scalar& c);

  PolyRingPtr ring_;
  Terms terms_;
};

}  // namespace ncd

#pragma once

#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "ncdioph/group_algebra.hpp"
#include "ncdioph/ncpoly.hpp"
#include "ncdioph/poly.hpp"
#include "ncdioph/scalar.hpp"

namespace ncd {

/// The algebraic structure an equation system lives in.
struct Structure {
  enum class Kind { Integers, GaussianIntegers, Field, Poly, Laurent, FreeAlgebra, GroupAlgebra };

  Kind kind = Kind::Integers;
  Field field = Field::rationals();
  PolyRingPtr poly;
  FreeAlgebraPtr freealg;
  GroupAlgebraPtr groupalg;

  static Structure integers();
  static Structure gaussian_integers();
  static Structure of_field(Field f);
  static Structure of_poly(PolyRingPtr ring);
  static Structure of_freealg(FreeAlgebraPtr alg);
  static Structure of_groupalg(GroupAlgebraPtr alg);
  /// Parses a descriptor such as "poly(Q; t1, t2)" or
  /// "groupalg(Q; raag(3; a-b, b-c))". Throws std::invalid_argument.
  static Structure parse(const std::string& desc);

  std::string describe() const;
  bool commutative() const;
  bool operator==(const Structure& o) const { return describe() == o.describe(); }
};

/// A value in some Structure.
class Element {
 public:
  using Value = std::variant<mpz_class, Scalar, Poly, NCPoly, GroupAlgElement>;

  Element(mpz_class v) : v_(std::move(v)) {}
  Element(Scalar v) : v_(std::move(v)) {}
  Element(Poly v) : v_(std::move(v)) {}
  Element(NCPoly v) : v_(std::move(v)) {}
  Element(GroupAlgElement v) : v_(std::move(v)) {}

  static Element zero(const Structure& s) { return from_int(s, 0); }
  static Element one(const Structure& s) { return from_int(s, 1); }
  static Element from_int(const Structure& s, const mpz_class& n);
  /// A field constant of s; over int and gaussint it must be integral.
  static Element scalar(const Structure& s, const Scalar& c);
  /// The element named by an identifier: a ring variable, an algebra or group
  /// generator, or i when the coefficient field contains it.
  static std::optional<Element> named(const Structure& s, const std::string& name);

  const Value& value() const { return v_; }
  template <class T>
  const T& as() const {
    return std::get<T>(v_);
  }

  bool is_zero() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator-() const;
  Element pow(unsigned long e) const;
  /// Multiplicative inverse of a unit; nullopt when the element is not one.
  std::optional<Element> unit_inverse() const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Value v_;
};

/// Whether e is a value of structure s (right representation, ring and field).
bool belongs_to(const Element& e, const Structure& s);

}  // namespace ncd

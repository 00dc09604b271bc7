#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ncd {

/// Raised when two values from different algebraic structures are combined.
class StructureMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class Scalar;

/// Descriptor of one of the supported computable fields: Q, F_p, or Q(i).
struct Field {
  enum class Kind : std::uint8_t { Rational, Prime, Gaussian };

  Kind kind = Kind::Rational;
  std::int64_t modulus = 0;  // only meaningful for Kind::Prime

  static Field rationals() { return {Kind::Rational, 0}; }
  static Field gaussian() { return {Kind::Gaussian, 0}; }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::int64_t p);
  /// Accepts "Q", "Qi", "F<p>".
  static Field parse(std::string_view text);

  std::int64_t characteristic() const { return kind == Kind::Prime ? modulus : 0; }
  bool has_i() const { return kind == Kind::Gaussian; }
  std::string name() const;

  /// Deterministic, duplicate-free candidate list. For F_p the first
  /// min(bound, p) residues; for Q every rational of height <= bound ordered
  /// by (height, denominator, |numerator|, positive first); for Q(i) pairs of
  /// such rationals graded by the larger height.
  std::vector<Scalar> enumerate(std::uint64_t bound) const;

  bool operator==(const Field&) const = default;
};

/// Exact element of Q, F_p or Q(i). Values are immutable and canonical:
/// two scalars compare equal iff they are the same field element.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, const mpz_class& n);
  static Scalar from_int(const Field& f, long n) { return from_int(f, mpz_class(n)); }
  /// num/den mapped into f. For F_p this requires den to be invertible mod p.
  static Scalar rational(const Field& f, const mpq_class& q);
  /// re + im*i; requires a field containing i.
  static Scalar gaussian(const Field& f, const mpq_class& re, const mpq_class& im);
  static Scalar imaginary_unit(const Field& f);

  const Field& field() const { return field_; }
  /// Rational value (Q), residue (F_p) or real part (Q(i)).
  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  /// True for elements of the prime subring image of Z (integers in Q / Q(i)).
  bool is_integer() const;
  /// max(|num|, den), taken over both parts for Q(i); the residue for F_p.
  mpz_class height() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;
  /// A square root inside the field, when one exists.
  std::optional<Scalar> sqrt() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Total order used only for canonical sorting (not the field order).
  bool operator<(const Scalar& o) const;

  /// Literal syntax accepted by the equation grammar: "3", "-1/2", "2+3*i", "i".
  std::string to_string() const;
  /// True when to_string() needs parentheses inside a product.
  bool is_compound() const;

 private:
  Scalar(Field f, mpq_class re, mpq_class im);
  /// Result of a ring operation on canonical operands: GMP already keeps
  /// rationals reduced, so only residues need work.
  struct Exact {};
  Scalar(Field f, mpq_class re, mpq_class im, Exact);
  void check_same(const Scalar& o) const;
  void canonicalize();

  Field field_ = Field::rationals();
  mpq_class re_;
  mpq_class im_;
};

}  // namespace ncd

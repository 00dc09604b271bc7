#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncdioph/scalar.hpp"

namespace ncd {

/// Free associative algebra A_K(A) over a finite alphabet of named letters.
struct FreeAlgebra {
  Field field;
  std::vector<std::string> letters;

  static std::shared_ptr<const FreeAlgebra> make(Field f, std::vector<std::string> letters);
  std::optional<std::uint32_t> index_of(const std::string& letter) const;
  std::string describe() const;
  bool operator==(const FreeAlgebra&) const = default;
};

using FreeAlgebraPtr = std::shared_ptr<const FreeAlgebra>;

/// Element of the free monoid: a sequence of letter indices.
using Word = std::vector<std::uint32_t>;

/// Length first, then lexicographic by letter index.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Noncommutative polynomial in normal form: distinct words in shortlex
/// order with nonzero coefficients.
class NCPoly {
 public:
  using Term = std::pair<Word, Scalar>;

  explicit NCPoly(FreeAlgebraPtr alg) : alg_(std::move(alg)) {}
  static NCPoly constant(FreeAlgebraPtr alg, const Scalar& c);
  static NCPoly from_int(FreeAlgebraPtr alg, long n);
  static NCPoly generator(FreeAlgebraPtr alg, std::uint32_t index);
  static NCPoly monomial(FreeAlgebraPtr alg, Word w, const Scalar& c);
  /// Collects like terms; words must be within the alphabet.
  static NCPoly from_terms(FreeAlgebraPtr alg, std::vector<Term> terms);

  const FreeAlgebraPtr& algebra() const { return alg_; }
  const Field& field() const { return alg_->field; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Number of monomials in the normal form.
  std::size_t width() const { return terms_.size(); }
  /// Longest word; 0 for the zero polynomial.
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.back().first.size(); }
  Scalar coefficient(const Word& w) const;

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const NCPoly& o) const;
  NCPoly operator*(const Scalar& c) const;
  NCPoly operator-() const;
  NCPoly pow(unsigned e) const;

  bool operator==(const NCPoly& o) const;
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  std::string to_string() const;
  bool is_compound() const;

 private:
  void check_algebra(const NCPoly& o) const;

  FreeAlgebraPtr alg_;
  std::vector<Term> terms_;
};

/// Units of A_K(A) are the nonzero scalars. Returns the inverse if f is one.
std::optional<NCPoly> unit_inverse(const NCPoly& f);

/// The retraction onto A_K(kept): letters outside `kept` map to 0. `kept`
/// lists letter indices of f's alphabet; the result lives over those letters
/// in the given order.
NCPoly retract(const NCPoly& f, const std::vector<std::uint32_t>& kept);
NCPoly retract(const NCPoly& f, const FreeAlgebraPtr& target, const std::vector<std::uint32_t>& kept);

/// Inclusion A_K(sub) -> A_K(super) sending letter i to letter index_map[i].
NCPoly embed(const NCPoly& f, const FreeAlgebraPtr& super, const std::vector<std::uint32_t>& index_map);

/// P1 = 0 or P2 = 0, as the single value P1 * P2.
NCPoly disjoin(const NCPoly& p1, const NCPoly& p2);
/// P1 = 0 and P2 = 0, as the single value P1^2 + a P2^2. Throws
/// std::invalid_argument if `a` is not a single generator.
NCPoly conjoin(const NCPoly& p1, const NCPoly& p2, const NCPoly& a);

/// Render a word with the algebra's letter names: "a*b*a", or "1" for ε.
std::string word_to_string(const FreeAlgebra& alg, const Word& w);

}  // namespace ncd

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncdioph/group.hpp"
#include "ncdioph/poly.hpp"
#include "ncdioph/scalar.hpp"

namespace ncd {

/// The group algebra K(G).
struct GroupAlgebra {
  Field field;
  GroupOraclePtr group;

  static std::shared_ptr<const GroupAlgebra> make(Field f, GroupOraclePtr g);
  /// "groupalg(Q; freegroup(2))"
  std::string describe() const;
  bool operator==(const GroupAlgebra& o) const;
};

using GroupAlgebraPtr = std::shared_ptr<const GroupAlgebra>;

/// Finite sum of alpha_i g_i with distinct normal-form g_i in shortlex order
/// and nonzero coefficients.
class GroupAlgElement {
 public:
  using Term = std::pair<GroupElement, Scalar>;

  explicit GroupAlgElement(GroupAlgebraPtr alg) : alg_(std::move(alg)) {}
  static GroupAlgElement constant(GroupAlgebraPtr alg, const Scalar& c);
  static GroupAlgElement from_int(GroupAlgebraPtr alg, long n);
  static GroupAlgElement element(GroupAlgebraPtr alg, const GroupElement& g, const Scalar& c);
  static GroupAlgElement element(GroupAlgebraPtr alg, const GroupElement& g);
  /// Normalizes the group elements and collects like terms.
  static GroupAlgElement from_terms(GroupAlgebraPtr alg, std::vector<Term> terms);

  const GroupAlgebraPtr& algebra() const { return alg_; }
  const Field& field() const { return alg_->field; }
  const GroupOracle& group() const { return *alg_->group; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t width() const { return terms_.size(); }
  /// Sum of |g_i| over the support.
  std::size_t total_length() const;
  Scalar coefficient(const GroupElement& g) const;

  GroupAlgElement operator+(const GroupAlgElement& o) const;
  GroupAlgElement operator-(const GroupAlgElement& o) const;
  GroupAlgElement operator*(const GroupAlgElement& o) const;
  GroupAlgElement operator*(const Scalar& c) const;
  GroupAlgElement operator-() const;
  GroupAlgElement pow(unsigned e) const;

  bool operator==(const GroupAlgElement& o) const;
  bool operator!=(const GroupAlgElement& o) const { return !(*this == o); }

  std::string to_string() const;
  bool is_compound() const;

 private:
  void check_algebra(const GroupAlgElement& o) const;

  GroupAlgebraPtr alg_;
  std::vector<Term> terms_;
};

/// Inverse of a trivial unit alpha*g; nullopt for anything else.
std::optional<GroupAlgElement> unit_inverse(const GroupAlgElement& u);

/// u g == g u
bool commutes_in_algebra(const GroupAlgElement& u, const GroupElement& g);

struct CentralizerReport {
  bool hypotheses_verified = false;
  /// Elements of length <= m commuting with g, shortlex order.
  std::vector<GroupElement> commuting_support;
  std::size_t supports_checked = 0;
  std::size_t disagreements = 0;
  bool all_agree() const { return disagreements == 0; }
};

/// Checks C_{K(G)}(g) = K(C_G(g)) on every u whose support has total length
/// at most m: ug = gu must hold exactly when each support element commutes
/// with g. Coefficient vectors range over {1, -1, 2}^|supp|.
CentralizerReport centralizer_support_check(const GroupAlgebraPtr& alg, const GroupElement& g, std::size_t m);

/// K(C_G(g)) -> K[t1^{±1}..tr^{±1}], basis_j -> t_j. Throws
/// std::invalid_argument if a support element is not a product of basis powers.
Poly laurent_iso(const GroupAlgElement& u, const std::vector<GroupElement>& basis, const PolyRingPtr& ring);
GroupAlgElement laurent_iso_inverse(const Poly& f, const GroupAlgebraPtr& alg, const std::vector<GroupElement>& basis);

}  // namespace ncd

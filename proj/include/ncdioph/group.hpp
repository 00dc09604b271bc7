#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncd {

/// Group element as its normal-form word. Letter +k is generator k-1,
/// letter -k its inverse.
using GroupElement = std::vector<int>;

/// Shortlex order with letters ranked a < a^-1 < b < b^-1 < ...
struct GroupElementLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const;
};

/// Word-problem oracle for a finitely generated group whose normal forms are
/// geodesic words, so |g| is the normal-form length.
class GroupOracle {
 public:
  explicit GroupOracle(std::vector<std::string> names) : names_(std::move(names)) {}
  virtual ~GroupOracle() = default;

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  std::optional<int> letter_of(const std::string& name) const;

  GroupElement identity() const { return {}; }
  GroupElement generator(std::size_t i) const;

  /// Normal form of an arbitrary word.
  virtual GroupElement normalize(const GroupElement& word) const = 0;
  /// Whether generators i and j commute (i != j).
  virtual bool generators_commute(std::size_t i, std::size_t j) const = 0;
  /// Grammar descriptor, e.g. "freegroup(2)".
  virtual std::string describe() const = 0;

  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement invert(const GroupElement& g) const;
  GroupElement power(const GroupElement& g, long e) const;
  std::size_t length(const GroupElement& g) const { return g.size(); }
  bool commutes(const GroupElement& g, const GroupElement& h) const;
  bool letters_commute(int x, int y) const;
  /// All elements of length <= m in shortlex order.
  std::vector<GroupElement> enumerate(std::size_t m) const;

  /// A free-abelian basis of C_G(g) when the instance certifies that the
  /// centralizer of g is of Laurent type; nullopt otherwise.
  virtual std::optional<std::vector<GroupElement>> centralizer_basis(const GroupElement& g) const = 0;

  /// "a*b^-1", "1" for the identity.
  std::string to_string(const GroupElement& g) const;

 private:
  std::vector<std::string> names_;
};

using GroupOraclePtr = std::shared_ptr<const GroupOracle>;

/// Right-angled Artin group on a simple graph; edges join commuting
/// generators. Normal forms are shortlex-least among reduced words.
class RaagOracle : public GroupOracle {
 public:
  RaagOracle(std::vector<std::string> names, std::vector<std::pair<std::size_t, std::size_t>> edges);

  GroupElement normalize(const GroupElement& word) const override;
  bool generators_commute(std::size_t i, std::size_t j) const override;
  std::string describe() const override;
  std::optional<std::vector<GroupElement>> centralizer_basis(const GroupElement& g) const override;

  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  /// No x^e ... x^-e with everything in between commuting with x, at either end.
  bool is_cyclically_reduced(const GroupElement& g) const;

 private:
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<bool>> adjacent_;
};

/// Free group on k generators (RAAG on the edgeless graph).
class FreeGroupOracle : public RaagOracle {
 public:
  explicit FreeGroupOracle(std::size_t k);
  FreeGroupOracle(std::vector<std::string> names);

  GroupElement normalize(const GroupElement& word) const override;
  std::string describe() const override;
  std::optional<std::vector<GroupElement>> centralizer_basis(const GroupElement& g) const override;

  /// The unique root r with g = r^k, k maximal; g must be nontrivial.
  GroupElement root(const GroupElement& g) const;
};

/// Free abelian group of rank r (RAAG on the complete graph). Elements are
/// exponent vectors, stored as the sorted word a^e1 b^e2 ...
class FreeAbelianOracle : public RaagOracle {
 public:
  explicit FreeAbelianOracle(std::size_t r);
  FreeAbelianOracle(std::vector<std::string> names);

  GroupElement normalize(const GroupElement& word) const override;
  std::string describe() const override;
  std::optional<std::vector<GroupElement>> centralizer_basis(const GroupElement& g) const override;

  std::vector<long> exponents(const GroupElement& g) const;
  GroupElement from_exponents(const std::vector<long>& e) const;
};

/// Default generator names a, b, c, ...
std::vector<std::string> default_generator_names(std::size_t k);

/// Exponents e with g = prod_j basis_j^{e_j}, found by search over
/// sum |e_j| <= |g| (enough for the shipped instances, where the basis
/// elements have disjoint supports or form a single root).
std::optional<std::vector<long>> decompose_in_basis(const GroupOracle& G, const GroupElement& g,
                                                    const std::vector<GroupElement>& basis);

}  // namespace ncd

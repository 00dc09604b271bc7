#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncdioph/system.hpp"

namespace ncd {

/// Raised when a witness cannot be produced because the source relation the
/// template encodes does not hold.
class WitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A system over the target structure with placeholder variables
/// "@b<j>.<c>" (coordinate c of block j) and auxiliaries "@a<k>".
struct Template {
  EqSystem system;
  std::size_t blocks = 0;
  std::vector<std::string> aux;
  /// Given the source elements the blocks encode, values for the auxiliaries.
  std::function<Assignment(const std::vector<Element>&)> witness;
  /// Auxiliary values computed from the target coordinates themselves
  /// (block-major), or nullopt when the relation fails. Base
  /// interpretations provide it; composites do not.
  std::function<std::optional<Assignment>(const std::vector<std::vector<Element>>&)> target_witness;
  std::string rule;

  explicit Template(Structure target) : system(std::move(target)) {}
};

std::string block_var(std::size_t block, std::size_t coord);
std::string aux_var(std::size_t k);

/// e-interpretation of `source` in `target`: the source is the image of the
/// solutions of `domain` in target^dim, with equality and the ring
/// operations given by systems.
struct Interpretation {
  Structure source;
  Structure target;
  std::size_t dim = 1;
  std::string name;
  Template domain, equality, add, mul;  // 1, 2, 3, 3 blocks; add: a + b = c
  std::function<std::vector<Element>(const Element&)> encode;
  /// Inverse of encode on domain points, where available.
  std::function<std::optional<Element>(const std::vector<Element>&)> decode;

  Interpretation(Structure s, Structure t)
      : source(s), target(t), domain(t), equality(t), add(t), mul(t) {}
};

using InterpPtr = std::shared_ptr<const Interpretation>;

struct Provenance {
  std::size_t target_equation = 0;
  std::string source;
  std::string construct;
  std::string rule;
};

/// Result of translate_system: the target system plus what is needed to
/// push a source solution forward.
class Translation {
 public:
  EqSystem target;
  /// Coordinate variable names of each source variable.
  std::map<std::string, std::vector<std::string>> var_blocks;
  std::vector<Provenance> provenance;

  explicit Translation(InterpPtr interp);
  const Interpretation& interpretation() const { return *interp_; }

  /// Target assignment encoding a source assignment. The source assignment
  /// must solve the source system for equation witnesses to exist.
  Assignment witness(const Assignment& source) const;
  nlohmann::json provenance_json() const;

 private:
  friend Translation translate_system(const InterpPtr&, const EqSystem&);
  struct Fresh {
    Term source;
    std::vector<std::string> coords;
  };
  struct Instance {
    const Template* tmpl;
    std::vector<Term> block_sources;
    std::map<std::string, std::string> aux_names;
  };
  InterpPtr interp_;
  std::vector<Fresh> fresh_;
  std::vector<Instance> instances_;
};

/// Flattens every source operation into a fresh block constrained by the
/// domain and the operation graph, replaces constants by their encodings,
/// and turns each equation l - r = 0 into an equality instance E(l, r).
Translation translate_system(const InterpPtr& interp, const EqSystem& sys);

/// I2 after I1: coordinates of I1 become I2-blocks.
InterpPtr compose(const InterpPtr& i1, const InterpPtr& i2);

/// Whether target blocks satisfy the template, using its target witness.
/// nullopt when the template has none.
std::optional<bool> holds(const Template& t, const std::vector<std::vector<Element>>& blocks);

}  // namespace ncd

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ncdioph/interpretation.hpp"

namespace ncd {

/// Thrown by forward_verify when the input assignment does not solve the
/// source system, so that a failure cannot be blamed on the compiler.
class NotASourceSolution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CompileOptions {
  /// Over free algebras, fold the whole system into one equation with
  /// P1^2 + a P2^2.
  bool single_equation = false;
};

struct Compiled {
  EqSystem source;
  /// The source system over the source structure of the pipeline (int
  /// systems are read as gaussint ones when the pipeline starts at Z[i]).
  EqSystem lifted;
  std::vector<InterpPtr> stages;
  InterpPtr interp;  // composite of the stages
  Translation translation;
  EqSystem target;
  bool single_equation = false;

  Compiled(EqSystem src, EqSystem lift, std::vector<InterpPtr> st, InterpPtr i, Translation tr, EqSystem tgt)
      : source(std::move(src)),
        lifted(std::move(lift)),
        stages(std::move(st)),
        interp(std::move(i)),
        translation(std::move(tr)),
        target(std::move(tgt)) {}

  nlohmann::json provenance_json() const;
};

/// The chain of interpretations from Z (or Z[i]) to `target`. Throws
/// std::invalid_argument for unsupported targets, with a message starting
/// "out of scope: char-p construction" for positive characteristic.
std::vector<InterpPtr> pipeline(const Structure& source, const Structure& target);

/// Compiles a system over int or gaussint into an equivalent one over `target`.
Compiled compile_h10(const EqSystem& sys, const Structure& target, const CompileOptions& opts = {});

/// Pushes a source solution through the composite encoder and checks it
/// against the compiled system. Throws NotASourceSolution.
bool forward_verify(const Compiled& c, const Assignment& source);

/// Same check, translating stage by stage instead of through the composite.
bool staged_forward_verify(const Compiled& c, const Assignment& source);

/// Encoder images of a source assignment, as a target assignment.
Assignment compiled_witness(const Compiled& c, const Assignment& source);

/// P1^2 + a P2^2 over a balanced tree of the equations; a must be a generator.
Term conjoin_terms(const std::vector<Term>& eqs, const Element& a);

}  // namespace ncd

#include <algorithm>

#include "ncdioph/field_solve.hpp"
#include "ncdioph/system.hpp"

namespace ncd {

namespace {

struct PolyOps {
  const PolyRingPtr& ring;
  const std::vector<std::string>& vars;
  Poly constant(const Element& e) { return Poly::constant(ring, e.as<Scalar>()); }
  Poly variable(const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    return Poly::variable(ring, static_cast<std::size_t>(it - vars.begin()));
  }
  Poly add(const Poly& a, const Poly& b) { return a + b; }
  Poly sub(const Poly& a, const Poly& b) { return a - b; }
  Poly mul(const Poly& a, const Poly& b) { return a * b; }
  Poly neg(const Poly& a) { return -a; }
  Poly pow(const Poly& a, unsigned long e) { return a.pow(static_cast<unsigned>(e)); }
};

}  // namespace

FieldSolveResult solve_field_system(const EqSystem& sys, const FieldSolveOptions& opts) {
  if (sys.structure.kind != Structure::Kind::Field)
    throw StructureMismatch("field solver needs a system over field(K), got " + sys.structure.describe());
  FieldProblem problem{PolyRing::make(sys.structure.field, sys.variables), {}};
  PolyOps ops{problem.ring, sys.variables};
  for (const auto& eq : sys.equations) problem.equations.push_back(fold_term<Poly>(eq, ops));
  return solve_polynomials(problem, opts);
}

}  // namespace ncd

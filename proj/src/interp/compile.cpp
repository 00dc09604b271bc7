#include "ncdioph/compile.hpp"

#include "ncdioph/reductions.hpp"

namespace ncd {

namespace {

using Kind = Structure::Kind;

void require_char_zero(const Field& f, const Structure& target) {
  if (f.characteristic() != 0)
    throw std::invalid_argument("out of scope: char-p construction (target " + target.describe() + ")");
}

// Laurent ring in the variables interp_laurent_in_groupalg uses for rank r.
PolyRingPtr centralizer_ring(const Field& f, std::size_t r) {
  std::vector<std::string> vars;
  if (r == 1)
    vars = {"t"};
  else
    for (std::size_t j = 0; j < r; ++j) vars.push_back("t" + std::to_string(j + 1));
  return PolyRing::make(f, vars, true);
}

// Z or Z[i] into a Laurent ring, through its first variable.
std::vector<InterpPtr> into_laurent(const PolyRingPtr& ring) {
  auto first = PolyRing::make(ring->field, {ring->vars[0]}, true);
  std::vector<InterpPtr> out{interp_Zi_in_laurent(first)};
  if (ring->arity() > 1) out.push_back(interp_quotient(ring));
  return out;
}

Term lift_term(const Term& t, const Structure& to) {
  switch (t->op) {
    case TermNode::Op::Const: {
      const auto& v = t->value->value();
      if (const auto* z = std::get_if<mpz_class>(&v)) return make_const(Element::from_int(to, *z));
      return t;
    }
    case TermNode::Op::Var: return t;
    case TermNode::Op::Add: return make_add(lift_term(t->args[0], to), lift_term(t->args[1], to));
    case TermNode::Op::Sub: return make_sub(lift_term(t->args[0], to), lift_term(t->args[1], to));
    case TermNode::Op::Mul: return make_mul(lift_term(t->args[0], to), lift_term(t->args[1], to));
    case TermNode::Op::Neg: return make_neg(lift_term(t->args[0], to));
    case TermNode::Op::Pow: return make_pow(lift_term(t->args[0], to), t->exponent);
  }
  throw std::logic_error("unreachable");
}

EqSystem lift_system(const EqSystem& sys, const Structure& to) {
  if (sys.structure == to) return sys;
  EqSystem out(to);
  for (const auto& v : sys.variables) out.declare(v);
  for (const auto& eq : sys.equations) out.add_equation(lift_term(eq, to));
  return out;
}

Assignment lift_assignment(const Assignment& a, const Structure& to) {
  Assignment out;
  for (const auto& [v, e] : a) {
    if (const auto* z = std::get_if<mpz_class>(&e.value()); z && to.kind == Kind::GaussianIntegers)
      out.insert_or_assign(v, Element::from_int(to, *z));
    else
      out.insert_or_assign(v, e);
  }
  return out;
}

void check_source(const Compiled& c, const Assignment& source) {
  for (const auto& v : c.source.variables)
    if (!source.count(v)) throw NotASourceSolution("not a source solution: " + v + " is unassigned");
  if (!check_solution(c.source, source)) throw NotASourceSolution("not a source solution");
}

}  // namespace

std::vector<InterpPtr> pipeline(const Structure& source, const Structure& target) {
  if (source.kind != Kind::Integers && source.kind != Kind::GaussianIntegers)
    throw std::invalid_argument("compile expects a system over int or gaussint, got " + source.describe());
  const bool gaussian = source.kind == Kind::GaussianIntegers;
  if (target == source) return {identity_interpretation(source)};

  switch (target.kind) {
    case Kind::Integers:
    case Kind::GaussianIntegers:
    case Kind::Field:
      throw std::invalid_argument("unsupported compile target " + target.describe());
    case Kind::Poly: {
      require_char_zero(target.field, target);
      if (gaussian) throw std::invalid_argument("gaussint systems need a Laurent or group algebra target over Qi");
      const auto& ring = target.poly;
      auto first = PolyRing::make(ring->field, {ring->vars[0]});
      std::vector<InterpPtr> out{interp_Z_in_polyring(first)};
      if (ring->arity() > 1) out.push_back(interp_quotient(ring));
      return out;
    }
    case Kind::Laurent: {
      require_char_zero(target.field, target);
      if (gaussian && !target.field.has_i())
        throw std::invalid_argument("gaussint systems need a coefficient field containing i");
      return into_laurent(target.poly);
    }
    case Kind::FreeAlgebra: {
      require_char_zero(target.field, target);
      if (gaussian) throw std::invalid_argument("gaussint systems need a Laurent or group algebra target over Qi");
      const auto& alg = target.freealg;
      if (alg->letters.empty()) throw std::invalid_argument("free algebra needs at least one letter");
      auto ring = PolyRing::make(alg->field, {"t"});
      return {interp_Z_in_polyring(ring), interp_Kt_in_freealg(alg, 0)};
    }
    case Kind::GroupAlgebra: {
      require_char_zero(target.field, target);
      if (gaussian && !target.field.has_i())
        throw std::invalid_argument("gaussint systems need a coefficient field containing i");
      const auto& alg = target.groupalg;
      const GroupOracle& G = *alg->group;
      if (G.rank() == 0) throw std::invalid_argument("group needs at least one generator");
      GroupElement g = G.generator(0);
      auto basis = G.centralizer_basis(g);
      if (!basis) {
        g = G.identity();
        for (std::size_t j = 0; j < G.rank(); ++j) g = G.multiply(g, G.generator(j));
        basis = G.centralizer_basis(g);
      }
      if (!basis) throw std::invalid_argument("no element with a Laurent-type centralizer found in " + G.describe());
      auto out = into_laurent(centralizer_ring(alg->field, basis->size()));
      out.push_back(interp_laurent_in_groupalg(alg, g, *basis));
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Term conjoin_terms(const std::vector<Term>& eqs, const Element& a) {
  if (eqs.empty()) return make_const(a - a);
  if (eqs.size() == 1) return eqs[0];
  const auto mid = static_cast<std::ptrdiff_t>(eqs.size() / 2);
  Term p1 = conjoin_terms({eqs.begin(), eqs.begin() + mid}, a);
  Term p2 = conjoin_terms({eqs.begin() + mid, eqs.end()}, a);
  return make_add(make_pow(p1, 2), make_mul(make_const(a), make_pow(p2, 2)));
}

Compiled compile_h10(const EqSystem& sys, const Structure& target, const CompileOptions& opts) {
  auto stages = pipeline(sys.structure, target);
  InterpPtr interp = stages[0];
  for (std::size_t k = 1; k < stages.size(); ++k) interp = compose(interp, stages[k]);
  EqSystem lifted = lift_system(sys, interp->source);
  Translation tr = translate_system(interp, lifted);
  EqSystem out = tr.target;
  bool single = false;
  if (opts.single_equation) {
    if (target.kind != Kind::FreeAlgebra)
      throw std::invalid_argument("--single-equation is only available for free algebra targets");
    EqSystem collapsed(out.structure);
    for (const auto& v : out.variables) collapsed.declare(v);
    auto a = Element::named(target, target.freealg->letters[0]);
    collapsed.add_equation(conjoin_terms(out.equations, *a));
    out = std::move(collapsed);
    single = true;
  }
  Compiled c(sys, std::move(lifted), std::move(stages), interp, std::move(tr), std::move(out));
  c.single_equation = single;
  return c;
}

nlohmann::json Compiled::provenance_json() const {
  auto j = translation.provenance_json();
  auto names = nlohmann::json::array();
  for (const auto& s : stages) names.push_back(s->name);
  j["stages"] = std::move(names);
  j["single_equation"] = single_equation;
  return j;
}

Assignment compiled_witness(const Compiled& c, const Assignment& source) {
  return c.translation.witness(lift_assignment(source, c.lifted.structure));
}

bool forward_verify(const Compiled& c, const Assignment& source) {
  check_source(c, source);
  Assignment w;
  try {
    w = compiled_witness(c, source);
  } catch (const WitnessError&) {
    return false;
  }
  return check_solution(c.target, w);
}

bool staged_forward_verify(const Compiled& c, const Assignment& source) {
  check_source(c, source);
  EqSystem sys = c.lifted;
  Assignment a = lift_assignment(source, sys.structure);
  try {
    for (const auto& stage : c.stages) {
      Translation tr = translate_system(stage, sys);
      a = tr.witness(a);
      sys = tr.target;
    }
  } catch (const WitnessError&) {
    return false;
  }
  if (c.single_equation) {
    EqSystem collapsed(sys.structure);
    for (const auto& v : sys.variables) collapsed.declare(v);
    auto x = Element::named(sys.structure, sys.structure.freealg->letters[0]);
    collapsed.add_equation(conjoin_terms(sys.equations, *x));
    sys = std::move(collapsed);
  }
  return check_solution(sys, a);
}

}  // namespace ncd

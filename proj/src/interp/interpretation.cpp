#include "ncdioph/interpretation.hpp"

#include <algorithm>
#include <regex>

namespace ncd {

std::string block_var(std::size_t block, std::size_t coord) {
  return "@b" + std::to_string(block) + "." + std::to_string(coord);
}

std::string aux_var(std::size_t k) { return "@a" + std::to_string(k); }

namespace {

Term substitute(const Term& t, const std::map<std::string, Term>& sub) {
  switch (t->op) {
    case TermNode::Op::Const: return t;
    case TermNode::Op::Var: {
      auto it = sub.find(t->name);
      return it == sub.end() ? t : it->second;
    }
    case TermNode::Op::Add: return make_add(substitute(t->args[0], sub), substitute(t->args[1], sub));
    case TermNode::Op::Sub: return make_sub(substitute(t->args[0], sub), substitute(t->args[1], sub));
    case TermNode::Op::Mul: return make_mul(substitute(t->args[0], sub), substitute(t->args[1], sub));
    case TermNode::Op::Neg: return make_neg(substitute(t->args[0], sub));
    case TermNode::Op::Pow: return make_pow(substitute(t->args[0], sub), t->exponent);
  }
  return t;
}

class Gensym {
 public:
  explicit Gensym(const std::vector<std::string>& taken) {
    static const std::regex re("_y([0-9]+)");
    std::smatch m;
    for (const auto& v : taken)
      if (std::regex_match(v, m, re)) next_ = std::max(next_, std::stoul(m[1].str()) + 1);
  }
  std::string operator()() { return "_y" + std::to_string(next_++); }

 private:
  std::size_t next_ = 0;
};

std::vector<Term> const_terms(const std::vector<Element>& values) {
  std::vector<Term> out;
  for (const auto& v : values) out.push_back(make_const(v));
  return out;
}

std::vector<Term> var_terms(const std::vector<std::string>& names) {
  std::vector<Term> out;
  for (const auto& n : names) out.push_back(make_var(n));
  return out;
}

}  // namespace

Translation::Translation(InterpPtr interp) : target(interp->target), interp_(std::move(interp)) {}

Translation translate_system(const InterpPtr& interp, const EqSystem& sys) {
  const Interpretation& I = *interp;
  if (!(sys.structure == I.source))
    throw StructureMismatch("interpretation of " + I.source.describe() + " applied to a system over " +
                            sys.structure.describe());
  Translation tr(interp);
  Gensym gensym(sys.variables);

  struct Block {
    std::vector<Term> coords;
    Term source;
  };

  std::string context, construct;
  auto instantiate = [&](const Template& tmpl, const std::vector<Block>& blocks) {
    std::map<std::string, Term> sub;
    for (std::size_t j = 0; j < blocks.size(); ++j)
      for (std::size_t c = 0; c < I.dim; ++c) sub[block_var(j, c)] = blocks[j].coords.at(c);
    Translation::Instance inst{&tmpl, {}, {}};
    for (const auto& b : blocks) inst.block_sources.push_back(b.source);
    for (const auto& a : tmpl.aux) {
      std::string name = gensym();
      inst.aux_names[a] = name;
      sub[a] = make_var(name);
      tr.target.declare(name);
    }
    for (const auto& eq : tmpl.system.equations) {
      Term t = substitute(eq, sub);
      if (is_zero_const(t)) continue;
      tr.provenance.push_back({tr.target.equations.size(), context, construct, tmpl.rule});
      tr.target.add_equation(t);
    }
    tr.instances_.push_back(std::move(inst));
  };

  auto fresh_block = [&](const Term& source) {
    Block b{{}, source};
    std::vector<std::string> names;
    for (std::size_t c = 0; c < I.dim; ++c) {
      names.push_back(gensym());
      tr.target.declare(names.back());
    }
    b.coords = var_terms(names);
    tr.fresh_.push_back({source, names});
    construct = "domain";
    instantiate(I.domain, {b});
    return b;
  };
  auto encoded = [&](const Element& value) { return Block{const_terms(I.encode(value)), make_const(value)}; };

  for (const auto& v : sys.variables) {
    std::vector<std::string> names;
    if (I.dim == 1) {
      names.push_back(v);
    } else {
      for (std::size_t c = 0; c < I.dim; ++c) names.push_back(gensym());
    }
    for (const auto& n : names) tr.target.declare(n);
    tr.var_blocks[v] = names;
    context = "variable " + v;
    construct = "domain";
    instantiate(I.domain, {Block{var_terms(names), make_var(v)}});
  }

  auto lower = [&](auto&& self, const Term& t) -> Block {
    switch (t->op) {
      case TermNode::Op::Const: return encoded(*t->value);
      case TermNode::Op::Var: return Block{var_terms(tr.var_blocks.at(t->name)), t};
      case TermNode::Op::Add:
      case TermNode::Op::Sub:
      case TermNode::Op::Mul: {
        Block u = self(self, t->args[0]);
        Block v = self(self, t->args[1]);
        Block r = fresh_block(t);
        if (t->op == TermNode::Op::Add) {
          construct = "sum";
          instantiate(I.add, {u, v, r});
        } else if (t->op == TermNode::Op::Sub) {
          construct = "difference";
          instantiate(I.add, {r, v, u});
        } else {
          construct = "product";
          instantiate(I.mul, {u, v, r});
        }
        return r;
      }
      case TermNode::Op::Neg: {
        Block u = self(self, t->args[0]);
        Block r = fresh_block(t);
        construct = "negation";
        instantiate(I.add, {r, u, encoded(Element::zero(I.source))});
        return r;
      }
      case TermNode::Op::Pow: {
        if (t->exponent == 0) return encoded(Element::one(I.source));
        Block u = self(self, t->args[0]);
        Block acc = u;
        for (unsigned long k = 2; k <= t->exponent; ++k) {
          Block r = fresh_block(make_pow(t->args[0], k));
          construct = "power";
          instantiate(I.mul, {acc, u, r});
          acc = r;
        }
        return acc;
      }
    }
    throw std::logic_error("unreachable");
  };

  for (std::size_t e = 0; e < sys.equations.size(); ++e) {
    const Term& t = sys.equations[e];
    if (is_zero_const(t)) continue;
    context = "equation " + std::to_string(e + 1) + ": " + term_to_string(t) + " = 0";
    Block l, r;
    if (t->op == TermNode::Op::Sub) {
      l = lower(lower, t->args[0]);
      r = lower(lower, t->args[1]);
    } else {
      l = lower(lower, t);
      r = encoded(Element::zero(I.source));
    }
    construct = "equality";
    instantiate(I.equality, {l, r});
  }
  return tr;
}

Assignment Translation::witness(const Assignment& source) const {
  const Interpretation& I = *interp_;
  Assignment out;
  auto put = [&](const std::vector<std::string>& names, const Element& value) {
    auto coords = I.encode(value);
    for (std::size_t c = 0; c < names.size(); ++c) out.insert_or_assign(names[c], coords.at(c));
  };
  for (const auto& [v, names] : var_blocks) {
    auto it = source.find(v);
    if (it == source.end()) throw UnboundVariable(v);
    put(names, it->second);
  }
  for (const auto& f : fresh_) put(f.coords, evaluate(f.source, source));
  for (const auto& inst : instances_) {
    std::vector<Element> values;
    for (const auto& s : inst.block_sources) values.push_back(evaluate(s, source));
    Assignment aux = inst.tmpl->witness(values);
    for (const auto& [ph, name] : inst.aux_names) {
      auto it = aux.find(ph);
      if (it == aux.end()) throw WitnessError("template " + inst.tmpl->rule + " gave no value for " + ph);
      out.insert_or_assign(name, it->second);
    }
  }
  return out;
}

nlohmann::json Translation::provenance_json() const {
  nlohmann::json j;
  j["interpretation"] = interp_->name;
  j["source_structure"] = interp_->source.describe();
  j["target_structure"] = interp_->target.describe();
  j["dimension"] = interp_->dim;
  auto blocks = nlohmann::json::object();
  for (const auto& [v, names] : var_blocks) blocks[v] = names;
  j["variables"] = std::move(blocks);
  auto eqs = nlohmann::json::array();
  for (const auto& p : provenance)
    eqs.push_back({{"equation", p.target_equation + 1}, {"source", p.source}, {"construct", p.construct},
                   {"rule", p.rule}});
  j["equations"] = std::move(eqs);
  return j;
}

// ---------------------------------------------------------------------------

namespace {

Template compose_template(const Template& t1, const InterpPtr& i1, const InterpPtr& i2) {
  const std::size_t dim1 = i1->dim, dim2 = i2->dim;
  EqSystem sys_b = t1.system;
  for (std::size_t j = 0; j < t1.blocks; ++j)
    for (std::size_t c = 0; c < dim1; ++c) sys_b.declare(block_var(j, c));
  for (const auto& a : t1.aux) sys_b.declare(a);
  auto tr = std::make_shared<Translation>(translate_system(i2, sys_b));

  std::map<std::string, Term> rename;
  std::map<std::string, std::string> aux_of;  // new aux name -> translated name
  std::vector<std::string> block_names;
  for (std::size_t j = 0; j < t1.blocks; ++j) {
    for (std::size_t c = 0; c < dim1; ++c) {
      const auto& names = tr->var_blocks.at(block_var(j, c));
      for (std::size_t d = 0; d < dim2; ++d) {
        std::string composite = block_var(j, c * dim2 + d);
        rename[names[d]] = make_var(composite);
        block_names.push_back(names[d]);
      }
    }
  }
  Template out(i2->target);
  out.blocks = t1.blocks;
  out.rule = t1.rule + " / " + i2->name;
  for (const auto& v : tr->target.variables) {
    if (std::find(block_names.begin(), block_names.end(), v) != block_names.end()) continue;
    std::string name = aux_var(out.aux.size());
    out.aux.push_back(name);
    aux_of[name] = v;
    rename[v] = make_var(name);
  }
  for (const auto& eq : tr->target.equations) out.system.add_equation(substitute(eq, rename));

  const Template* inner = &t1;
  out.witness = [i1, tr, inner, aux_of](const std::vector<Element>& values) {
    Assignment b = inner->witness(values);
    for (std::size_t j = 0; j < values.size(); ++j) {
      auto coords = i1->encode(values[j]);
      for (std::size_t c = 0; c < coords.size(); ++c) b.insert_or_assign(block_var(j, c), coords[c]);
    }
    Assignment target = tr->witness(b);
    Assignment out;
    for (const auto& [name, inner_name] : aux_of) out.insert_or_assign(name, target.at(inner_name));
    return out;
  };
  return out;
}

}  // namespace

InterpPtr compose(const InterpPtr& i1, const InterpPtr& i2) {
  if (!(i1->target == i2->source))
    throw StructureMismatch("cannot compose: " + i1->target.describe() + " is not " + i2->source.describe());
  auto out = std::make_shared<Interpretation>(i1->source, i2->target);
  out->dim = i1->dim * i2->dim;
  out->name = i1->name + " | " + i2->name;
  // The composite keeps i1 alive through the captured pointer; templates of
  // i1 are referenced by address inside the witnesses.
  out->domain = compose_template(i1->domain, i1, i2);
  out->equality = compose_template(i1->equality, i1, i2);
  out->add = compose_template(i1->add, i1, i2);
  out->mul = compose_template(i1->mul, i1, i2);
  // Sigma_2 on every coordinate comes from translating the placeholders.
  out->encode = [i1, i2](const Element& a) {
    std::vector<Element> coords;
    for (const auto& c : i1->encode(a))
      for (auto& d : i2->encode(c)) coords.push_back(std::move(d));
    return coords;
  };
  if (i1->decode && i2->decode) {
    out->decode = [i1, i2](const std::vector<Element>& coords) -> std::optional<Element> {
      std::vector<Element> mid;
      for (std::size_t c = 0; c < i1->dim; ++c) {
        std::vector<Element> part(coords.begin() + static_cast<std::ptrdiff_t>(c * i2->dim),
                                  coords.begin() + static_cast<std::ptrdiff_t>((c + 1) * i2->dim));
        auto d = i2->decode(part);
        if (!d) return std::nullopt;
        mid.push_back(*d);
      }
      return i1->decode(mid);
    };
  }
  return out;
}

std::optional<bool> holds(const Template& t, const std::vector<std::vector<Element>>& blocks) {
  if (!t.target_witness) return std::nullopt;
  auto aux = t.target_witness(blocks);
  if (!aux) return false;
  Assignment a = *aux;
  for (std::size_t j = 0; j < blocks.size(); ++j)
    for (std::size_t c = 0; c < blocks[j].size(); ++c) a.insert_or_assign(block_var(j, c), blocks[j][c]);
  return check_solution(t.system, a);
}

}  // namespace ncd

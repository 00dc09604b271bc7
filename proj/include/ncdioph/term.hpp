#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncdioph/structure.hpp"

namespace ncd {

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

/// Immutable expression tree. Builders fold variable-free subtrees into a
/// single constant, so a term is either a constant or mentions a variable.
struct TermNode {
  enum class Op { Add, Sub, Mul, Neg, Pow, Const, Var };

  Op op;
  std::vector<Term> args;
  unsigned long exponent = 0;     // Pow
  std::optional<Element> value;   // Const
  std::string name;               // Var
};

Term make_const(Element value);
Term make_var(std::string name);
Term make_add(Term a, Term b);
Term make_sub(Term a, Term b);
Term make_mul(Term a, Term b);
Term make_neg(Term a);
Term make_pow(Term a, unsigned long e);

bool is_const(const Term& t);
/// Constant zero.
bool is_zero_const(const Term& t);
bool structurally_equal(const Term& a, const Term& b);
/// Variable names in first-occurrence order (left to right).
void collect_variables(const Term& t, std::vector<std::string>& out);

/// Grammar rendering with minimal parentheses.
std::string term_to_string(const Term& t);
/// {"op": "add", "args": [...]}, {"op": "const", "value": "2*t"},
/// {"op": "var", "name": "x1"}, {"op": "pow", "exp": 2, "args": [...]}.
nlohmann::json term_to_json(const Term& t);

class UnboundVariable : public std::out_of_range {
 public:
  explicit UnboundVariable(const std::string& name) : std::out_of_range("no value for variable " + name) {}
};

/// Homomorphic fold over a term. `Ops` supplies
///   V constant(const Element&), V variable(const std::string&),
///   V add(V, V), V sub(V, V), V mul(V, V), V neg(V), V pow(V, unsigned long).
template <class V, class Ops>
V fold_term(const Term& t, Ops& ops) {
  switch (t->op) {
    case TermNode::Op::Const: return ops.constant(*t->value);
    case TermNode::Op::Var: return ops.variable(t->name);
    case TermNode::Op::Add: return ops.add(fold_term<V>(t->args[0], ops), fold_term<V>(t->args[1], ops));
    case TermNode::Op::Sub: return ops.sub(fold_term<V>(t->args[0], ops), fold_term<V>(t->args[1], ops));
    case TermNode::Op::Mul: return ops.mul(fold_term<V>(t->args[0], ops), fold_term<V>(t->args[1], ops));
    case TermNode::Op::Neg: return ops.neg(fold_term<V>(t->args[0], ops));
    case TermNode::Op::Pow: return ops.pow(fold_term<V>(t->args[0], ops), t->exponent);
  }
  throw std::logic_error("unreachable");
}

using Assignment = std::map<std::string, Element>;

/// Exact value of t under the assignment. Throws UnboundVariable.
Element evaluate(const Term& t, const Assignment& assignment);

}  // namespace ncd

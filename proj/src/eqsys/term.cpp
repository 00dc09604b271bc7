#include "ncdioph/term.hpp"

#include <algorithm>
#include <cctype>

namespace ncd {

namespace {

Term node(TermNode::Op op, std::vector<Term> args) {
  auto n = std::make_shared<TermNode>();
  n->op = op;
  n->args = std::move(args);
  return n;
}

}  // namespace

Term make_const(Element value) {
  auto n = std::make_shared<TermNode>();
  n->op = TermNode::Op::Const;
  n->value = std::move(value);
  return n;
}

Term make_var(std::string name) {
  auto n = std::make_shared<TermNode>();
  n->op = TermNode::Op::Var;
  n->name = std::move(name);
  return n;
}

bool is_const(const Term& t) { return t->op == TermNode::Op::Const; }

bool is_zero_const(const Term& t) { return is_const(t) && t->value->is_zero(); }

Term make_add(Term a, Term b) {
  if (is_const(a) && is_const(b)) return make_const(*a->value + *b->value);
  return node(TermNode::Op::Add, {std::move(a), std::move(b)});
}

Term make_sub(Term a, Term b) {
  if (is_const(a) && is_const(b)) return make_const(*a->value - *b->value);
  return node(TermNode::Op::Sub, {std::move(a), std::move(b)});
}

Term make_mul(Term a, Term b) {
  if (is_const(a) && is_const(b)) return make_const(*a->value * *b->value);
  return node(TermNode::Op::Mul, {std::move(a), std::move(b)});
}

Term make_neg(Term a) {
  if (is_const(a)) return make_const(-*a->value);
  return node(TermNode::Op::Neg, {std::move(a)});
}

Term make_pow(Term a, unsigned long e) {
  if (is_const(a)) return make_const(a->value->pow(e));
  auto n = std::make_shared<TermNode>();
  n->op = TermNode::Op::Pow;
  n->args = {std::move(a)};
  n->exponent = e;
  return n;
}

bool structurally_equal(const Term& a, const Term& b) {
  if (a->op != b->op || a->args.size() != b->args.size()) return false;
  switch (a->op) {
    case TermNode::Op::Const: return *a->value == *b->value;
    case TermNode::Op::Var: return a->name == b->name;
    case TermNode::Op::Pow:
      if (a->exponent != b->exponent) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!structurally_equal(a->args[i], b->args[i])) return false;
  return true;
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t->op == TermNode::Op::Var) {
    if (std::find(out.begin(), out.end(), t->name) == out.end()) out.push_back(t->name);
    return;
  }
  for (const auto& a : t->args) collect_variables(a, out);
}

namespace {

bool is_atom_text(const std::string& s) {
  if (s.empty()) return false;
  if (std::all_of(s.begin(), s.end(), ::isdigit)) return true;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

int precedence(const Term& t) {
  switch (t->op) {
    case TermNode::Op::Add:
    case TermNode::Op::Sub: return 1;
    case TermNode::Op::Mul: return 2;
    case TermNode::Op::Neg: return 3;
    case TermNode::Op::Pow: return 4;
    case TermNode::Op::Const:
    case TermNode::Op::Var: return 5;
  }
  return 5;
}

void render(const Term& t, int min_prec, std::string& out) {
  if (t->op == TermNode::Op::Const) {
    std::string s = t->value->to_string();
    // A bare product such as 2*t^3 re-parses to the same constant unless it
    // sits to the right of another factor.
    const bool product = s[0] != '-' && s.find_first_of("+-", 1) == std::string::npos;
    if (is_atom_text(s) || (product && min_prec <= 2))
      out += s;
    else
      out += "(" + s + ")";
    return;
  }
  const bool parens = precedence(t) < min_prec;
  if (parens) out += '(';
  switch (t->op) {
    case TermNode::Op::Var: out += t->name; break;
    case TermNode::Op::Add:
    case TermNode::Op::Sub:
      render(t->args[0], 1, out);
      out += t->op == TermNode::Op::Add ? " + " : " - ";
      render(t->args[1], 2, out);
      break;
    case TermNode::Op::Mul:
      render(t->args[0], 2, out);
      out += '*';
      render(t->args[1], 3, out);
      break;
    case TermNode::Op::Neg:
      out += '-';
      render(t->args[0], 3, out);
      break;
    case TermNode::Op::Pow:
      render(t->args[0], 5, out);
      out += '^' + std::to_string(t->exponent);
      break;
    case TermNode::Op::Const: break;
  }
  if (parens) out += ')';
}

const char* op_name(TermNode::Op op) {
  switch (op) {
    case TermNode::Op::Add: return "add";
    case TermNode::Op::Sub: return "sub";
    case TermNode::Op::Mul: return "mul";
    case TermNode::Op::Neg: return "neg";
    case TermNode::Op::Pow: return "pow";
    case TermNode::Op::Const: return "const";
    case TermNode::Op::Var: return "var";
  }
  return "?";
}

}  // namespace

std::string term_to_string(const Term& t) {
  std::string out;
  render(t, 1, out);
  return out;
}

nlohmann::json term_to_json(const Term& t) {
  nlohmann::json j;
  j["op"] = op_name(t->op);
  switch (t->op) {
    case TermNode::Op::Const: j["value"] = t->value->to_string(); break;
    case TermNode::Op::Var: j["name"] = t->name; break;
    default: {
      if (t->op == TermNode::Op::Pow) j["exp"] = t->exponent;
      auto args = nlohmann::json::array();
      for (const auto& a : t->args) args.push_back(term_to_json(a));
      j["args"] = std::move(args);
    }
  }
  return j;
}

namespace {

struct ElementOps {
  const Assignment& assignment;
  Element constant(const Element& e) { return e; }
  Element variable(const std::string& name) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw UnboundVariable(name);
    return it->second;
  }
  Element add(const Element& a, const Element& b) { return a + b; }
  Element sub(const Element& a, const Element& b) { return a - b; }
  Element mul(const Element& a, const Element& b) { return a * b; }
  Element neg(const Element& a) { return -a; }
  Element pow(const Element& a, unsigned long e) { return a.pow(e); }
};

}  // namespace

Element evaluate(const Term& t, const Assignment& assignment) {
  ElementOps ops{assignment};
  return fold_term<Element>(t, ops);
}

}  // namespace ncd

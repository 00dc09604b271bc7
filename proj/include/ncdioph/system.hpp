#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncdioph/structure.hpp"
#include "ncdioph/term.hpp"

namespace ncd {

/// Syntax or typing error in equation text, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Finite system of equations t = 0 over one structure.
struct EqSystem {
  Structure structure;
  std::vector<Term> equations;
  /// Every variable of the system, in first-occurrence order. May also list
  /// variables that no equation mentions.
  std::vector<std::string> variables;

  explicit EqSystem(Structure s) : structure(std::move(s)) {}
  /// Appends t = 0 and registers its variables.
  void add_equation(Term t);
  void declare(const std::string& var);
};

/// Reads "structure <desc>; lhs = rhs; ...". `#` starts a comment.
EqSystem parse_system(const std::string& text);
/// Parses a single expression against a known structure.
Term parse_term(const std::string& text, const Structure& s);
/// Parses "x1=2, x2=-1" style bindings.
Assignment parse_assignment(const std::string& text, const Structure& s);

std::string serialize(const EqSystem& sys);
nlohmann::json to_json(const EqSystem& sys);
bool structurally_equal(const EqSystem& a, const EqSystem& b);

/// Every equation evaluates to zero. Throws UnboundVariable.
bool check_solution(const EqSystem& sys, const Assignment& assignment);

}  // namespace ncd

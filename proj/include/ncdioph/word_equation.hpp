#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncdioph/ncpoly.hpp"

namespace ncd {

/// A letter of the alphabet or a word variable.
struct WordSymbol {
  bool is_var = false;
  std::uint32_t index = 0;
  bool operator==(const WordSymbol&) const = default;
};

struct WordEquation {
  std::vector<WordSymbol> lhs, rhs;
};

struct WordSystem {
  std::vector<std::string> alphabet;
  std::vector<std::string> variables;
  std::vector<WordEquation> equations;
};

/// One word per variable, in variable order.
using WordAssignment = std::vector<Word>;

/// Componentwise shortlex comparison of assignments.
struct AssignmentLess {
  bool operator()(const WordAssignment& a, const WordAssignment& b) const;
};

struct WordSolveStats {
  std::size_t length_vectors = 0;
};

/// Every assignment with all variable lengths <= max_len that satisfies the
/// system, sorted by AssignmentLess. Length vectors are solved first; each
/// consistent one is resolved by unifying positions.
std::vector<WordAssignment> word_solve(const WordSystem& sys, std::size_t max_len, WordSolveStats* stats = nullptr);

/// Whether some length vector within the bound balances every equation.
bool length_feasible(const WordSystem& sys, std::size_t max_len);

bool satisfies(const WordSystem& sys, const WordAssignment& a);

/// Text format, one equation per line: "x1 a = a x1". Variables are x<digits>,
/// anything else is a letter; "1" denotes the empty word. An optional line
/// "alphabet a b" fixes the alphabet and its order; `#` starts a comment.
WordSystem parse_word_system(const std::string& text);

std::string format_word(const WordSystem& sys, const Word& w);
std::string format_assignment(const WordSystem& sys, const WordAssignment& a);

}  // namespace ncd

#include "ncdioph/word_equation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace ncd {

bool AssignmentLess::operator()(const WordAssignment& a, const WordAssignment& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ShortLex{});
}

namespace {

struct LengthConstraint {
  std::vector<long> coef;  // per variable: occurrences on the left minus on the right
  long constant = 0;
};

std::vector<LengthConstraint> length_constraints(const WordSystem& sys) {
  std::vector<LengthConstraint> out;
  for (const auto& eq : sys.equations) {
    LengthConstraint c;
    c.coef.assign(sys.variables.size(), 0);
    for (const auto& s : eq.lhs) s.is_var ? ++c.coef[s.index] : ++c.constant;
    for (const auto& s : eq.rhs) s.is_var ? --c.coef[s.index] : --c.constant;
    out.push_back(std::move(c));
  }
  return out;
}

// Calls visit(lengths) for each length vector with entries <= max_len that
// satisfies all constraints, in lexicographic order.
template <class F>
void for_each_length_vector(const WordSystem& sys, std::size_t max_len, F&& visit) {
  const auto cons = length_constraints(sys);
  const std::size_t n = sys.variables.size();
  const long L = static_cast<long>(max_len);
  // lo[j][k], hi[j][k]: range of sum_{v >= k} coef_v * len_v for constraint j.
  std::vector<std::vector<long>> lo(cons.size(), std::vector<long>(n + 1, 0)), hi = lo;
  for (std::size_t j = 0; j < cons.size(); ++j) {
    for (std::size_t k = n; k-- > 0;) {
      long c = cons[j].coef[k];
      lo[j][k] = lo[j][k + 1] + std::min(0L, c * L);
      hi[j][k] = hi[j][k + 1] + std::max(0L, c * L);
    }
  }
  std::vector<long> partial(cons.size());
  for (std::size_t j = 0; j < cons.size(); ++j) partial[j] = cons[j].constant;
  std::vector<std::size_t> len(n, 0);
  auto feasible = [&](std::size_t k) {
    for (std::size_t j = 0; j < cons.size(); ++j)
      if (partial[j] + lo[j][k] > 0 || partial[j] + hi[j][k] < 0) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (!feasible(k)) return true;
    if (k == n) return visit(len);
    for (std::size_t l = 0; l <= max_len; ++l) {
      len[k] = l;
      for (std::size_t j = 0; j < cons.size(); ++j) partial[j] += cons[j].coef[k] * static_cast<long>(l);
      bool go_on = self(self, k + 1);
      for (std::size_t j = 0; j < cons.size(); ++j) partial[j] -= cons[j].coef[k] * static_cast<long>(l);
      if (!go_on) return false;
    }
    return true;
  };
  rec(rec, 0);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool length_feasible(const WordSystem& sys, std::size_t max_len) {
  bool found = false;
  for_each_length_vector(sys, max_len, [&](const std::vector<std::size_t>&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<WordAssignment> word_solve(const WordSystem& sys, std::size_t max_len, WordSolveStats* stats) {
  const std::size_t n = sys.variables.size();
  const std::size_t k = sys.alphabet.size();
  std::vector<WordAssignment> out;
  for_each_length_vector(sys, max_len, [&](const std::vector<std::size_t>& len) {
    if (stats) ++stats->length_vectors;
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + len[v];
    const std::size_t cells = offset[n];
    UnionFind uf(cells + k);
    auto expand = [&](const std::vector<WordSymbol>& side) {
      std::vector<std::size_t> seq;
      for (const auto& s : side) {
        if (s.is_var)
          for (std::size_t p = 0; p < len[s.index]; ++p) seq.push_back(offset[s.index] + p);
        else
          seq.push_back(cells + s.index);
      }
      return seq;
    };
    for (const auto& eq : sys.equations) {
      auto l = expand(eq.lhs), r = expand(eq.rhs);
      for (std::size_t p = 0; p < l.size(); ++p) uf.unite(l[p], r[p]);
    }
    // Each class holds at most one letter.
    std::vector<long> letter_of(cells + k, -1);
    for (std::size_t a = 0; a < k; ++a) {
      auto root = uf.find(cells + a);
      if (letter_of[root] >= 0) return true;
      letter_of[root] = static_cast<long>(a);
    }
    std::map<std::size_t, std::size_t> free_slot;
    for (std::size_t c = 0; c < cells; ++c) {
      auto root = uf.find(c);
      if (letter_of[root] < 0) free_slot.try_emplace(root, free_slot.size());
    }
    if (!free_slot.empty() && k == 0) return true;
    std::vector<std::size_t> choice(free_slot.size(), 0);
    while (true) {
      WordAssignment a(n);
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t p = 0; p < len[v]; ++p) {
          auto root = uf.find(offset[v] + p);
          a[v].push_back(static_cast<std::uint32_t>(letter_of[root] >= 0 ? letter_of[root]
                                                                          : static_cast<long>(choice[free_slot[root]])));
        }
      }
      out.push_back(std::move(a));
      std::size_t j = choice.size();
      while (j > 0 && ++choice[j - 1] == k) choice[--j] = 0;
      if (j == 0) break;
    }
    return true;
  });
  std::sort(out.begin(), out.end(), AssignmentLess{});
  return out;
}

bool satisfies(const WordSystem& sys, const WordAssignment& a) {
  auto expand = [&](const std::vector<WordSymbol>& side) {
    Word w;
    for (const auto& s : side) {
      if (s.is_var)
        w.insert(w.end(), a.at(s.index).begin(), a.at(s.index).end());
      else
        w.push_back(s.index);
    }
    return w;
  };
  return std::all_of(sys.equations.begin(), sys.equations.end(),
                     [&](const WordEquation& eq) { return expand(eq.lhs) == expand(eq.rhs); });
}

WordSystem parse_word_system(const std::string& text) {
  static const std::regex var_re("x[0-9]+");
  static const std::regex letter_re("[A-Za-z_][A-Za-z0-9_]*");
  WordSystem sys;
  bool fixed_alphabet = false;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
  };
  auto intern = [](std::vector<std::string>& names, const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it != names.end()) return static_cast<std::uint32_t>(it - names.begin());
    names.push_back(s);
    return static_cast<std::uint32_t>(names.size() - 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> toks;
    for (std::string t; tokens >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "alphabet") {
      if (fixed_alphabet || !sys.equations.empty()) fail("alphabet must be declared once, before equations");
      fixed_alphabet = true;
      for (std::size_t j = 1; j < toks.size(); ++j) {
        if (!std::regex_match(toks[j], letter_re) || std::regex_match(toks[j], var_re)) fail("bad letter " + toks[j]);
        intern(sys.alphabet, toks[j]);
      }
      continue;
    }
    WordEquation eq;
    bool right = false;
    for (const auto& t : toks) {
      if (t == "=") {
        if (right) fail("more than one '='");
        right = true;
        continue;
      }
      if (t == "1") continue;
      WordSymbol s;
      if (std::regex_match(t, var_re)) {
        s = {true, intern(sys.variables, t)};
      } else if (std::regex_match(t, letter_re)) {
        auto it = std::find(sys.alphabet.begin(), sys.alphabet.end(), t);
        if (fixed_alphabet && it == sys.alphabet.end()) fail("letter " + t + " is not in the alphabet");
        s = {false, intern(sys.alphabet, t)};
      } else {
        fail("bad symbol " + t);
      }
      (right ? eq.rhs : eq.lhs).push_back(s);
    }
    if (!right) fail("missing '='");
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

std::string format_word(const WordSystem& sys, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (auto l : w) {
    if (!out.empty()) out += ' ';
    out += sys.alphabet.at(l);
  }
  return out;
}

std::string format_assignment(const WordSystem& sys, const WordAssignment& a) {
  std::string out;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (v) out += ", ";
    out += sys.variables[v] + " = " + format_word(sys, a[v]);
  }
  return out;
}

}  // namespace ncd

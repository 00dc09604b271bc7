#include "ncdioph/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace ncd {

namespace {

int letter_code(int x) { return 2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0); }

std::size_t gen(int x) { return static_cast<std::size_t>(std::abs(x) - 1); }

}  // namespace

bool GroupElementLess::operator()(const GroupElement& a, const GroupElement& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return letter_code(a[i]) < letter_code(b[i]);
  return false;
}

std::vector<std::string> default_generator_names(std::size_t k) {
  if (k > 26) throw std::invalid_argument("at most 26 default generator names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    char c = static_cast<char>('a' + i);
    // 'i' is reserved for the imaginary unit in the equation grammar
    if (c >= 'i') ++c;
    names.emplace_back(1, c);
  }
  return names;
}

std::optional<int> GroupOracle::letter_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin()) + 1;
}

GroupElement GroupOracle::generator(std::size_t i) const {
  if (i >= rank()) throw std::out_of_range("generator index out of range");
  return {static_cast<int>(i) + 1};
}

GroupElement GroupOracle::multiply(const GroupElement& g, const GroupElement& h) const {
  GroupElement w = g;
  w.insert(w.end(), h.begin(), h.end());
  return normalize(w);
}

GroupElement GroupOracle::invert(const GroupElement& g) const {
  GroupElement w(g.rbegin(), g.rend());
  for (auto& x : w) x = -x;
  return normalize(w);
}

GroupElement GroupOracle::power(const GroupElement& g, long e) const {
  GroupElement base = e < 0 ? invert(g) : g;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  GroupElement result;
  while (n) {
    if (n & 1ul) result = multiply(result, base);
    n >>= 1;
    if (n) base = multiply(base, base);
  }
  return result;
}

bool GroupOracle::commutes(const GroupElement& g, const GroupElement& h) const {
  return multiply(g, h) == multiply(h, g);
}

bool GroupOracle::letters_commute(int x, int y) const {
  if (gen(x) == gen(y)) return true;
  return generators_commute(gen(x), gen(y));
}

std::vector<GroupElement> GroupOracle::enumerate(std::size_t m) const {
  std::set<GroupElement, GroupElementLess> all{identity()};
  std::vector<GroupElement> frontier{identity()};
  for (std::size_t len = 0; len < m; ++len) {
    std::set<GroupElement, GroupElementLess> next;
    for (const auto& g : frontier) {
      for (std::size_t i = 0; i < rank(); ++i) {
        for (int sign : {1, -1}) {
          GroupElement h = multiply(g, {sign * (static_cast<int>(i) + 1)});
          if (h.size() == len + 1) next.insert(std::move(h));
        }
      }
    }
    frontier.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  return {all.begin(), all.end()};
}

std::string GroupOracle::to_string(const GroupElement& g) const {
  if (g.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < g.size();) {
    std::size_t j = i;
    while (j < g.size() && g[j] == g[i]) ++j;
    if (!out.empty()) out += '*';
    out += names_[gen(g[i])];
    long e = static_cast<long>(j - i) * (g[i] < 0 ? -1 : 1);
    if (e != 1) out += '^' + std::to_string(e);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------

RaagOracle::RaagOracle(std::vector<std::string> names, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : GroupOracle(std::move(names)), edges_(std::move(edges)) {
  adjacent_.assign(rank(), std::vector<bool>(rank(), false));
  for (auto [i, j] : edges_) {
    if (i >= rank() || j >= rank() || i == j) throw std::invalid_argument("bad RAAG edge");
    adjacent_[i][j] = adjacent_[j][i] = true;
  }
}

bool RaagOracle::generators_commute(std::size_t i, std::size_t j) const { return i == j || adjacent_[i][j]; }

namespace {

// Distinct generators that commute; the trace-monoid independence relation.
bool independent(const GroupOracle& G, int x, int y) { return gen(x) != gen(y) && G.letters_commute(x, y); }

}  // namespace

GroupElement RaagOracle::normalize(const GroupElement& word) const {
  for (int x : word)
    if (x == 0 || gen(x) >= rank()) throw std::out_of_range("letter outside the generating set");
  // Cancel x^e ... x^-e whenever everything in between commutes with x.
  GroupElement reduced;
  for (int x : word) {
    bool cancelled = false;
    for (std::size_t j = reduced.size(); j-- > 0;) {
      int y = reduced[j];
      if (y == -x) {
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(j));
        cancelled = true;
        break;
      }
      if (!independent(*this, x, y)) break;
    }
    if (!cancelled) reduced.push_back(x);
  }
  // Lexicographically least linearization of the trace.
  GroupElement out;
  out.reserve(reduced.size());
  while (!reduced.empty()) {
    std::size_t best = reduced.size();
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j) movable = independent(*this, reduced[j], reduced[i]);
      if (movable && (best == reduced.size() || letter_code(reduced[i]) < letter_code(reduced[best]))) best = i;
    }
    out.push_back(reduced[best]);
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

std::string RaagOracle::describe() const {
  std::string out = "raag(" + std::to_string(rank()) + ";";
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    out += (k ? ", " : " ") + generator_names()[edges_[k].first] + "-" + generator_names()[edges_[k].second];
  }
  return out + ")";
}

bool RaagOracle::is_cyclically_reduced(const GroupElement& g) const {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool to_front = true;
    for (std::size_t j = 0; j < i && to_front; ++j) to_front = independent(*this, g[j], g[i]);
    if (!to_front) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || g[k] != -g[i]) continue;
      bool to_back = true;
      for (std::size_t j = k + 1; j < n && to_back; ++j) to_back = independent(*this, g[j], g[k]);
      if (to_back) return false;
    }
  }
  return true;
}

namespace {

// Shortest r with r^k = p for a reduced word p, trying trace prefixes.
GroupElement trace_root(const GroupOracle& G, const GroupElement& p) {
  const std::size_t n = p.size();
  std::map<int, std::size_t> counts;
  for (int x : p) ++counts[x];
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const std::size_t k = n / d;
    bool divisible = std::all_of(counts.begin(), counts.end(), [k](const auto& kv) { return kv.second % k == 0; });
    if (!divisible) continue;
    std::map<int, std::size_t> want;
    for (const auto& [x, c] : counts) want[x] = c / k;
    std::vector<bool> chosen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (want[p[i]] > 0) {
        chosen[i] = true;
        --want[p[i]];
      }
    }
    bool prefix = true;
    for (std::size_t i = 0; i < n && prefix; ++i) {
      if (!chosen[i]) continue;
      for (std::size_t j = 0; j < i && prefix; ++j)
        if (!chosen[j] && !independent(G, p[j], p[i])) prefix = false;
    }
    if (!prefix) continue;
    GroupElement r;
    for (std::size_t i = 0; i < n; ++i)
      if (chosen[i]) r.push_back(p[i]);
    r = G.normalize(r);
    if (G.power(r, static_cast<long>(k)) == G.normalize(p)) return r;
  }
  return G.normalize(p);
}

}  // namespace

std::optional<std::vector<GroupElement>> RaagOracle::centralizer_basis(const GroupElement& g0) const {
  const GroupElement g = normalize(g0);
  std::vector<bool> present(rank(), false);
  for (int x : g) present[gen(x)] = true;
  if (std::find(present.begin(), present.end(), false) != present.end()) return std::nullopt;
  if (!is_cyclically_reduced(g)) return std::nullopt;
  // Components of the non-commutation graph split g into commuting pure factors.
  std::vector<int> component(rank(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < rank(); ++s) {
    if (component[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    component[s] = ncomp;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < rank(); ++w) {
        if (component[w] < 0 && !generators_commute(v, w)) {
          component[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<GroupElement> basis;
  for (int c = 0; c < ncomp; ++c) {
    GroupElement factor;
    for (int x : g)
      if (component[gen(x)] == c) factor.push_back(x);
    basis.push_back(trace_root(*this, factor));
  }
  return basis;
}

// ---------------------------------------------------------------------------

FreeGroupOracle::FreeGroupOracle(std::size_t k) : FreeGroupOracle(default_generator_names(k)) {}

FreeGroupOracle::FreeGroupOracle(std::vector<std::string> names) : RaagOracle(std::move(names), {}) {}

GroupElement FreeGroupOracle::normalize(const GroupElement& word) const {
  GroupElement out;
  for (int x : word) {
    if (x == 0 || gen(x) >= rank()) throw std::out_of_range("letter outside the generating set");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

std::string FreeGroupOracle::describe() const { return "freegroup(" + std::to_string(rank()) + ")"; }

GroupElement FreeGroupOracle::root(const GroupElement& g0) const {
  const GroupElement g = normalize(g0);
  if (g.empty()) throw std::invalid_argument("the identity has no root");
  std::size_t k = 0;
  while (2 * (k + 1) <= g.size() && g[k] == -g[g.size() - 1 - k]) ++k;
  GroupElement w(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(k));
  GroupElement c(g.begin() + static_cast<std::ptrdiff_t>(k), g.end() - static_cast<std::ptrdiff_t>(k));
  std::size_t period = c.size();
  for (std::size_t p = 1; p < c.size(); ++p) {
    if (c.size() % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < c.size() && periodic; ++i) periodic = c[i] == c[i - p];
    if (periodic) {
      period = p;
      break;
    }
  }
  GroupElement r(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(period));
  return multiply(multiply(w, r), invert(w));
}

std::optional<std::vector<GroupElement>> FreeGroupOracle::centralizer_basis(const GroupElement& g) const {
  if (normalize(g).empty()) return std::nullopt;
  return std::vector<GroupElement>{root(g)};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<std::size_t, std::size_t>> complete_graph(std::size_t r) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) edges.emplace_back(i, j);
  return edges;
}

}  // namespace

FreeAbelianOracle::FreeAbelianOracle(std::size_t r) : FreeAbelianOracle(default_generator_names(r)) {}

FreeAbelianOracle::FreeAbelianOracle(std::vector<std::string> names)
    : RaagOracle(names, complete_graph(names.size())) {}

std::vector<long> FreeAbelianOracle::exponents(const GroupElement& g) const {
  std::vector<long> e(rank(), 0);
  for (int x : g) {
    if (x == 0 || gen(x) >= rank()) throw std::out_of_range("letter outside the generating set");
    e[gen(x)] += x > 0 ? 1 : -1;
  }
  return e;
}

GroupElement FreeAbelianOracle::from_exponents(const std::vector<long>& e) const {
  GroupElement out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    int letter = static_cast<int>(i) + 1;
    for (long k = 0; k < std::abs(e[i]); ++k) out.push_back(e[i] > 0 ? letter : -letter);
  }
  return out;
}

GroupElement FreeAbelianOracle::normalize(const GroupElement& word) const { return from_exponents(exponents(word)); }

std::string FreeAbelianOracle::describe() const { return "freeabelian(" + std::to_string(rank()) + ")"; }

std::optional<std::vector<GroupElement>> FreeAbelianOracle::centralizer_basis(const GroupElement&) const {
  std::vector<GroupElement> basis;
  for (std::size_t i = 0; i < rank(); ++i) basis.push_back(generator(i));
  return basis;
}

// ---------------------------------------------------------------------------

std::optional<std::vector<long>> decompose_in_basis(const GroupOracle& G, const GroupElement& g0,
                                                    const std::vector<GroupElement>& basis) {
  const GroupElement g = G.normalize(g0);
  const long budget = static_cast<long>(g.size());
  const std::size_t b = basis.size();
  std::vector<long> e(b, 0);
  std::optional<std::vector<long>> found;
  // Exponent vectors by increasing l1 norm.
  std::function<void(std::size_t, long, const GroupElement&)> search = [&](std::size_t j, long remaining,
                                                                           const GroupElement& acc) {
    if (found) return;
    if (j == b) {
      if (remaining == 0 && acc == g) found = e;
      return;
    }
    for (long k = 0; k <= remaining && !found; ++k) {
      for (long sign : {1L, -1L}) {
        if (k == 0 && sign < 0) continue;
        e[j] = sign * k;
        search(j + 1, remaining - k, G.multiply(acc, G.power(basis[j], e[j])));
        if (found) return;
      }
    }
    e[j] = 0;
  };
  for (long norm = 0; norm <= budget && !found; ++norm) search(0, norm, G.identity());
  return found;
}

}  // namespace ncd

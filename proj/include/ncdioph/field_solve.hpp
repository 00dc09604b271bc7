#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncdioph/poly.hpp"
#include "ncdioph/scalar.hpp"

namespace ncd {

struct EqSystem;

enum class FieldStatus { Sat, Unsat, UnknownWithinBound };

std::string to_string(FieldStatus s);

/// Polynomial equations f_j = 0 over a field, in the variables of one ring.
struct FieldProblem {
  PolyRingPtr ring;
  std::vector<Poly> equations;
};

struct FieldSolveOptions {
  /// Height bound for branching over Q and Q(i); F_p is always exhausted.
  std::uint64_t height_bound = 10;
  /// Stop after this many solutions; 0 collects all of them.
  std::size_t max_solutions = 1;
};

struct FieldSolveResult {
  FieldStatus status = FieldStatus::Unsat;
  /// Points in the ring's variable order, in search order.
  std::vector<std::vector<Scalar>> solutions;
  /// The search did not cover the whole field: a free variable was cut at the
  /// height bound, or a nonlinear equation was met over Q or Q(i).
  bool truncated = false;
  std::size_t nodes = 0;
};

/// Backtracking search assigning variables in ring order. An equation is
/// used as soon as its highest variable is reached; it is then univariate
/// and its roots are computed exactly when its degree is at most two.
/// Over F_p the search is exhaustive, so "no solution" is a proof; over Q and
/// Q(i) only purely linear refutations are reported as Unsat.
FieldSolveResult solve_polynomials(const FieldProblem& problem, const FieldSolveOptions& opts = {});

/// Same search for a parsed system over field(K).
FieldSolveResult solve_field_system(const EqSystem& sys, const FieldSolveOptions& opts = {});

}  // namespace ncd

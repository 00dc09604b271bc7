#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncdioph/system.hpp"

namespace ncd {

enum class SolveStatus { Sat, UnsatWithinBounds, UnsatComplete, Unknown };

std::string to_string(SolveStatus s);
/// 0 SAT, 3 either UNSAT, 4 UNKNOWN.
int exit_code(SolveStatus s);

struct SolveStats {
  std::size_t patterns = 0;
  std::size_t oracle_calls = 0;
  std::optional<double> millis;
};

struct SolveReport {
  SolveStatus status = SolveStatus::Unknown;
  /// Sorted canonically; every one re-verified against the input system.
  std::vector<Assignment> witnesses;
  SolveStats stats;

  nlohmann::ordered_json to_json(const EqSystem& sys) const;
  std::string to_text(const EqSystem& sys) const;
};

struct SolveOptions {
  /// Degree, total length or width bound, depending on the solver.
  std::size_t bound = 1;
  /// Length bound for the unknown words of the width solver.
  std::size_t wordlen = 2;
  std::uint64_t height = 10;
  /// 0 collects every solution within the bounds.
  std::size_t max_witnesses = 1;
  /// Bounded degree: restrict to the letters that occur in the system.
  bool retract = true;
};

/// x = sum of alpha_i M_i over all monomials of degree <= bound.
SolveReport solve_bounded_degree(const EqSystem& sys, const SolveOptions& opts);

/// Supports in the ball of the group with total length <= bound.
SolveReport solve_bounded_length(const EqSystem& sys, const SolveOptions& opts);

/// x = sum_{i <= bound} alpha_i W_i with unknown words (or group elements) of
/// length <= wordlen, resolved pattern by pattern.
SolveReport solve_bounded_width(const EqSystem& sys, const SolveOptions& opts);

/// A system over field(K), through the field search.
SolveReport solve_in_field(const EqSystem& sys, const SolveOptions& opts);

}  // namespace ncd

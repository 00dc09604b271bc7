#include "ncdioph/system.hpp"

#include <algorithm>

namespace ncd {

void EqSystem::add_equation(Term t) {
  collect_variables(t, variables);
  equations.push_back(std::move(t));
}

void EqSystem::declare(const std::string& var) {
  if (std::find(variables.begin(), variables.end(), var) == variables.end()) variables.push_back(var);
}

std::string serialize(const EqSystem& sys) {
  std::string out = "structure " + sys.structure.describe() + ";\n";
  for (const auto& eq : sys.equations) out += term_to_string(eq) + " = 0;\n";
  return out;
}

nlohmann::json to_json(const EqSystem& sys) {
  nlohmann::json j;
  j["structure"] = sys.structure.describe();
  j["variables"] = sys.variables;
  auto eqs = nlohmann::json::array();
  for (const auto& eq : sys.equations) eqs.push_back(term_to_json(eq));
  j["equations"] = std::move(eqs);
  return j;
}

bool structurally_equal(const EqSystem& a, const EqSystem& b) {
  if (!(a.structure == b.structure) || a.equations.size() != b.equations.size()) return false;
  for (std::size_t i = 0; i < a.equations.size(); ++i)
    if (!structurally_equal(a.equations[i], b.equations[i])) return false;
  return true;
}

bool check_solution(const EqSystem& sys, const Assignment& assignment) {
  for (const auto& [name, value] : assignment)
    if (!belongs_to(value, sys.structure))
      throw StructureMismatch("value for " + name + " is not in " + sys.structure.describe());
  return std::all_of(sys.equations.begin(), sys.equations.end(),
                     [&](const Term& eq) { return evaluate(eq, assignment).is_zero(); });
}

}  // namespace ncd

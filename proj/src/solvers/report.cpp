#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "common.hpp"

namespace ncd {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat: return "SAT";
    case SolveStatus::UnsatWithinBounds: return "UNSAT_WITHIN_BOUNDS";
    case SolveStatus::UnsatComplete: return "UNSAT_COMPLETE";
    case SolveStatus::Unknown: return "UNKNOWN";
  }
  return "?";
}

int exit_code(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat: return 0;
    case SolveStatus::UnsatWithinBounds:
    case SolveStatus::UnsatComplete: return 3;
    case SolveStatus::Unknown: return 4;
  }
  return 4;
}

nlohmann::ordered_json SolveReport::to_json(const EqSystem& sys) const {
  nlohmann::ordered_json j;
  j["status"] = to_string(status);
  auto ws = nlohmann::ordered_json::array();
  for (const auto& w : witnesses) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& v : sys.variables) o[v] = w.at(v).to_string();
    ws.push_back(std::move(o));
  }
  j["witnesses"] = std::move(ws);
  j["stats"] = {{"patterns", stats.patterns}, {"oracle_calls", stats.oracle_calls}, {"millis", nullptr}};
  if (stats.millis) j["stats"]["millis"] = *stats.millis;
  return j;
}

std::string SolveReport::to_text(const EqSystem& sys) const {
  std::ostringstream out;
  out << to_string(status) << '\n';
  for (const auto& w : witnesses) {
    out << ' ';
    for (std::size_t k = 0; k < sys.variables.size(); ++k)
      out << (k ? ", " : " ") << sys.variables[k] << " = " << w.at(sys.variables[k]).to_string();
    out << '\n';
  }
  out << "patterns " << stats.patterns << ", oracle calls " << stats.oracle_calls;
  if (stats.millis) out << ", " << *stats.millis << " ms";
  out << '\n';
  return out.str();
}

namespace detail {

std::vector<std::string> witness_key(const EqSystem& sys, const Assignment& a) {
  std::vector<std::string> key;
  for (const auto& v : sys.variables) key.push_back(a.at(v).to_string());
  return key;
}

bool key_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const std::string& x, const std::string& y) {
                                        return x.size() != y.size() ? x.size() < y.size() : x < y;
                                      });
}

void WitnessSet::add(const Assignment& a) {
  if (!check_solution(*sys_, a))
    throw std::logic_error("solver produced a non-solution: " + witness_key(*sys_, a).front());
  witnesses_.emplace(witness_key(*sys_, a), a);
}

bool WitnessSet::full(std::size_t max) const { return max != 0 && witnesses_.size() >= max; }

std::vector<Assignment> WitnessSet::sorted() const {
  std::vector<Assignment> out;
  for (const auto& [k, a] : witnesses_) out.push_back(a);
  return out;
}

void finish(SolveReport& r, const WitnessSet& ws, std::size_t max) {
  r.witnesses = ws.sorted();
  if (max && r.witnesses.size() > max) r.witnesses.resize(max);
}

}  // namespace detail

SolveReport solve_in_field(const EqSystem& sys, const SolveOptions& opts) {
  if (sys.structure.kind != Structure::Kind::Field)
    throw std::invalid_argument("field mode needs a system over field(K), got " + sys.structure.describe());
  FieldSolveOptions fo;
  fo.height_bound = opts.height;
  fo.max_solutions = opts.max_witnesses;
  auto res = solve_field_system(sys, fo);
  SolveReport r;
  r.stats.patterns = 1;
  r.stats.oracle_calls = 1;
  detail::WitnessSet ws(sys);
  for (const auto& pt : res.solutions) {
    Assignment a;
    for (std::size_t k = 0; k < sys.variables.size(); ++k) a.insert_or_assign(sys.variables[k], Element(pt[k]));
    ws.add(a);
  }
  detail::finish(r, ws, opts.max_witnesses);
  r.status = res.status == FieldStatus::Sat     ? SolveStatus::Sat
             : res.status == FieldStatus::Unsat ? SolveStatus::UnsatComplete
                                                : SolveStatus::Unknown;
  return r;
}

}  // namespace ncd

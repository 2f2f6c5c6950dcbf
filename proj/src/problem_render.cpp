#include <sstream>
#include <string>

#include "termrw/problem.hpp"

namespace termrw {

const char* to_string(ProblemStrategy s) {
  switch (s) {
    case ProblemStrategy::Full: return "FULL";
    case ProblemStrategy::Innermost: return "INNERMOST";
    case ProblemStrategy::Outermost: return "OUTERMOST";
  }
  return "?";
}

namespace {

void section(std::ostream& os, const std::string& key, const std::string& body) {
  os << '(' << key;
  if (!body.empty()) os << ' ' << body;
  os << ")\n";
}

}  // namespace

std::string render_problem(const Problem& p) {
  std::ostringstream os;
  if (!p.variables.empty()) {
    os << "(VAR";
    for (const auto& v : p.variables) os << ' ' << v;
    os << ")\n";
  }
  os << "(RULES\n";
  for (const auto& r : p.strict_rules) os << r.lhs << " -> " << r.rhs << '\n';
  for (const auto& r : p.weak_rules) os << r.lhs << " ->= " << r.rhs << '\n';
  os << ")\n";
  if (p.strategy) os << "(STRATEGY " << to_string(*p.strategy) << ")\n";
  for (const auto& s : p.preserved_sections) section(os, s.key, s.body);
  if (p.comment) section(os, "COMMENT", *p.comment);
  return os.str();
}

TrsVerdict check_local_confluence(const Problem& p, std::size_t fuel) {
  if (!p.weak_rules.empty()) throw WeakRulesPresent();
  return check_local_confluence(p.strict_rules, fuel);
}

}  // namespace termrw

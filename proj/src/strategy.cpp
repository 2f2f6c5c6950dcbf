#include "termrw/critical_pairs.hpp"
#include "termrw/rewriting.hpp"

namespace termrw {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Full: return "full";
    case Strategy::Root: return "root";
    case Strategy::Outermost: return "outer";
    case Strategy::Innermost: return "inner";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(const std::string& name) {
  if (name == "full") return Strategy::Full;
  if (name == "root") return Strategy::Root;
  if (name == "outer" || name == "outermost") return Strategy::Outermost;
  if (name == "inner" || name == "innermost") return Strategy::Innermost;
  return std::nullopt;
}

const char* to_string(OverlapScope s) {
  switch (s) {
    case OverlapScope::All: return "all";
    case OverlapScope::Inner: return "inner";
    case OverlapScope::Outer: return "outer";
  }
  return "?";
}

}  // namespace termrw

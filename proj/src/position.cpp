#include "termrw/position.hpp"

#include <algorithm>
#include <ostream>

namespace termrw {

PositionRelation compare(const Position& p, const Position& q) {
  const auto common = std::min(p.size(), q.size());
  if (!std::equal(p.begin(), p.begin() + common, q.begin())) {
    return PositionRelation::Parallel;
  }
  if (p.size() == q.size()) return PositionRelation::Equal;
  return p.size() < q.size() ? PositionRelation::Above : PositionRelation::Below;
}

Position concat(const Position& p, const Position& q) {
  std::vector<std::size_t> out;
  out.reserve(p.size() + q.size());
  out.insert(out.end(), p.begin(), p.end());
  out.insert(out.end(), q.begin(), q.end());
  return Position(std::move(out));
}

std::string to_string(const Position& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  out += ']';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Position& p) {
  return os << to_string(p);
}

const char* to_string(PositionRelation r) {
  switch (r) {
    case PositionRelation::Equal: return "Equal";
    case PositionRelation::Above: return "Above";
    case PositionRelation::Below: return "Below";
    case PositionRelation::Parallel: return "Parallel";
  }
  return "?";
}

}  // namespace termrw

#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "termrw/substitution.hpp"
#include "termrw/term.hpp"

namespace termrw {

/// A directed equation `lhs -> rhs`. Both sides share one variable namespace.
///
/// Invalid rules are representable; operations that need valid rules say so.
template <class F, class V>
struct Rule {
  Term<F, V> lhs;
  Term<F, V> rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// lhs is not a variable and every rhs variable occurs in lhs.
template <class F, class V>
bool is_valid(const Rule<F, V>& r) {
  if (r.lhs.is_var()) return false;
  const auto left = var_set(r.lhs);
  for (const auto& v : vars(r.rhs)) {
    if (!left.count(v)) return false;
  }
  return true;
}

struct RuleProperties {
  bool left_linear = true;
  bool right_linear = true;
  bool linear = true;
  bool duplicating = false;
  bool erasing = false;
  bool collapsing = false;
  bool ground = true;

  friend bool operator==(const RuleProperties&, const RuleProperties&) = default;
};

template <class F, class V>
RuleProperties properties(const Rule<F, V>& r) {
  RuleProperties p;
  p.left_linear = is_linear(r.lhs);
  p.right_linear = is_linear(r.rhs);
  p.linear = p.left_linear && p.right_linear;

  std::map<V, long> balance;  // rhs occurrences minus lhs occurrences
  for (const auto& v : vars(r.lhs)) --balance[v];
  for (const auto& v : vars(r.rhs)) ++balance[v];
  const auto right = var_set(r.rhs);
  for (const auto& [v, n] : balance) {
    if (n > 0) p.duplicating = true;
    if (!right.count(v)) p.erasing = true;
  }
  p.collapsing = r.rhs.is_var();
  p.ground = is_ground(r.lhs) && is_ground(r.rhs);
  return p;
}

/// One substitution sends both sides of `general` to the sides of `r`.
template <class F, class V>
bool is_instance_of(const Rule<F, V>& r, const Rule<F, V>& general) {
  GeneralizedSubstitution<F, V, V> sigma;
  return match_into(general.lhs, r.lhs, sigma) &&
         match_into(general.rhs, r.rhs, sigma);
}

template <class F, class V>
bool is_variant_of(const Rule<F, V>& a, const Rule<F, V>& b) {
  return is_instance_of(a, b) && is_instance_of(b, a);
}

enum class Side { Left, Right };

/// A variable tagged with the rule it came from, used to rename two rules
/// apart.
template <class V>
struct TaggedVar {
  Side side;
  V base;

  friend bool operator==(const TaggedVar&, const TaggedVar&) = default;
  friend bool operator<(const TaggedVar& a, const TaggedVar& b) {
    if (a.side != b.side) return a.side < b.side;
    return a.base < b.base;
  }
};

template <class V>
std::ostream& operator<<(std::ostream& os, const TaggedVar<V>& v) {
  return os << v.base << (v.side == Side::Left ? "_L" : "_R");
}

template <class F, class V>
Rule<F, TaggedVar<V>> tag_rule(const Rule<F, V>& r, Side side) {
  auto tag = [side](const V& v) { return TaggedVar<V>{side, v}; };
  return {map_vars(r.lhs, tag), map_vars(r.rhs, tag)};
}

/// Renames `a` into the left namespace and `b` into the right namespace.
template <class F, class V>
std::pair<Rule<F, TaggedVar<V>>, Rule<F, TaggedVar<V>>> rename_apart(
    const Rule<F, V>& a, const Rule<F, V>& b) {
  return {tag_rule(a, Side::Left), tag_rule(b, Side::Right)};
}

template <class F, class V>
std::ostream& operator<<(std::ostream& os, const Rule<F, V>& r) {
  return os << r.lhs << " -> " << r.rhs;
}

template <class F, class V>
std::string to_string(const Rule<F, V>& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace termrw

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "termrw/position.hpp"
#include "termrw/rewriting.hpp"
#include "termrw/rule.hpp"
#include "termrw/substitution.hpp"
#include "termrw/term.hpp"

namespace termrw {

/// Which overlap positions to report. Outer overlaps are at the root.
enum class OverlapScope { All, Inner, Outer };

/// An overlap of two rules, annotated with its peak.
///
/// `top` rewrites to `left` by `left_rule` at `left_pos`, and to `right` by
/// `right_rule` at the root. Terms live in the tagged namespace produced by
/// renaming the two rules apart; left-rule variables carry Side::Left.
template <class F, class V>
struct CriticalPair {
  using TermT = Term<F, TaggedVar<V>>;

  TermT top;
  TermT left;
  TermT right;
  Rule<F, V> left_rule;
  Rule<F, V> right_rule;
  Position left_pos;
  std::size_t left_rule_index = 0;
  std::size_t right_rule_index = 0;

  bool is_outer() const { return left_pos.is_root(); }

  friend bool operator==(const CriticalPair&, const CriticalPair&) = default;
};

/// Critical pairs of `rules`, ordered by (right rule index, overlap position
/// in preorder, left rule index). A rule's overlap with itself at the root is
/// skipped; identical rules at different indices still overlap. Mirror-image
/// root pairs are both kept. Throws InvalidRule.
template <class F, class V>
std::vector<CriticalPair<F, V>> critical_pairs(
    const std::vector<Rule<F, V>>& rules,
    OverlapScope scope = OverlapScope::All) {
  require_valid(rules);
  std::vector<CriticalPair<F, V>> out;
  for (std::size_t j = 0; j < rules.size(); ++j) {
    const auto outer_lhs = tag_rule(rules[j], Side::Right).lhs;
    for (const auto& p : positions(outer_lhs)) {
      if (scope == OverlapScope::Outer && !p.is_root()) continue;
      if (scope == OverlapScope::Inner && p.is_root()) continue;
      const auto& sub = subterm_at(outer_lhs, p);
      if (sub.is_var()) continue;
      for (std::size_t i = 0; i < rules.size(); ++i) {
        if (p.is_root() && i == j) continue;
        const auto [inner, outer] = rename_apart(rules[i], rules[j]);
        const auto mgu = unify(inner.lhs, sub);
        if (!mgu) continue;
        auto top = substitute(*mgu, outer.lhs);
        auto left = replace_at(top, p, substitute(*mgu, inner.rhs));
        auto right = substitute(*mgu, outer.rhs);
        out.push_back({std::move(top), std::move(left), std::move(right),
                       rules[i], rules[j], p, i, j});
      }
    }
  }
  return out;
}

const char* to_string(OverlapScope s);

/// Renames tagged variables to x1, x2, ... in order of first occurrence
/// across all terms passed through it, in preorder.
template <class V>
class CanonicalNamer {
 public:
  template <class F>
  Term<F, std::string> operator()(const Term<F, TaggedVar<V>>& t) {
    return map_vars(t, [this](const TaggedVar<V>& v) { return name(v); });
  }

 private:
  std::string name(const TaggedVar<V>& v) {
    auto it = names_.find(v);
    if (it != names_.end()) return it->second;
    auto fresh = "x" + std::to_string(names_.size() + 1);
    names_.emplace(v, fresh);
    return fresh;
  }

  std::map<TaggedVar<V>, std::string> names_;
};

template <class F>
struct CanonicalCriticalPair {
  Term<F, std::string> top;
  Term<F, std::string> left;
  Term<F, std::string> right;
};

/// The pair's terms with variables named by a CanonicalNamer run over top,
/// left, then right.
template <class F, class V>
CanonicalCriticalPair<F> canonical_names(const CriticalPair<F, V>& cp,
                                         CanonicalNamer<V>& namer) {
  auto top = namer(cp.top);
  auto left = namer(cp.left);
  auto right = namer(cp.right);
  return {std::move(top), std::move(left), std::move(right)};
}

template <class F, class V>
CanonicalCriticalPair<F> canonical_names(const CriticalPair<F, V>& cp) {
  CanonicalNamer<V> namer;
  return canonical_names(cp, namer);
}

}  // namespace termrw

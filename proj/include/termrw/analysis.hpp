#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "termrw/critical_pairs.hpp"
#include "termrw/rewriting.hpp"
#include "termrw/rule.hpp"
#include "termrw/term.hpp"

namespace termrw {

template <class F, class W>
struct NormalizationResult {
  Term<F, W> final_term;
  std::size_t steps = 0;
  bool reached_normal_form = false;

  friend bool operator==(const NormalizationResult&,
                         const NormalizationResult&) = default;
};

/// Rewrites `t` leftmost-innermost until no redex remains or `fuel` steps
/// have been taken. Each step takes the first innermost reduct (smallest
/// position in preorder, then smallest rule index). Throws InvalidRule.
template <class F, class V, class W>
NormalizationResult<F, W> nf(const std::vector<Rule<F, V>>& rules,
                             const Term<F, W>& t, std::size_t fuel) {
  require_valid(rules);
  NormalizationResult<F, W> out{t, 0, false};
  for (;;) {
    auto reducts = rewrite_step(rules, out.final_term, Strategy::Innermost);
    if (reducts.empty()) {
      out.reached_normal_form = true;
      return out;
    }
    if (out.steps == fuel) return out;
    out.final_term = std::move(reducts.front().result);
    ++out.steps;
  }
}

struct LocallyConfluent {};

/// A critical pair whose sides reach distinct normal forms. This refutes
/// confluence whether or not the system terminates.
template <class F, class V>
struct NotConfluent {
  CriticalPair<F, V> witness;
  Term<F, TaggedVar<V>> nf_left;
  Term<F, TaggedVar<V>> nf_right;
};

/// Some critical pairs ran out of fuel before reaching normal forms.
struct Unknown {
  std::size_t unresolved = 0;
};

template <class F, class V>
using ConfluenceVerdict =
    std::variant<LocallyConfluent, NotConfluent<F, V>, Unknown>;

/// Local confluence by normalizing both sides of every critical pair.
///
/// A pair is joinable when both sides normalize to the same term within
/// `fuel` steps. The first pair (in emission order) with two distinct normal
/// forms is returned as a witness; otherwise any pair that ran out of fuel
/// makes the verdict Unknown. Termination is not checked, so a
/// LocallyConfluent verdict implies confluence only for terminating systems.
/// Throws InvalidRule.
template <class F, class V>
ConfluenceVerdict<F, V> check_local_confluence(
    const std::vector<Rule<F, V>>& rules, std::size_t fuel) {
  require_valid(rules);
  std::size_t unresolved = 0;
  for (auto& cp : critical_pairs(rules, OverlapScope::All)) {
    auto l = nf(rules, cp.left, fuel);
    auto r = nf(rules, cp.right, fuel);
    if (!l.reached_normal_form || !r.reached_normal_form) {
      ++unresolved;
      continue;
    }
    if (l.final_term != r.final_term) {
      return NotConfluent<F, V>{std::move(cp), std::move(l.final_term),
                                std::move(r.final_term)};
    }
  }
  if (unresolved) return Unknown{unresolved};
  return LocallyConfluent{};
}

}  // namespace termrw

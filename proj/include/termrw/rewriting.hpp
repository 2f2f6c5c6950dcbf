#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "termrw/errors.hpp"
#include "termrw/position.hpp"
#include "termrw/rule.hpp"
#include "termrw/substitution.hpp"
#include "termrw/term.hpp"

namespace termrw {

/// Which redex positions a rewrite step may use.
enum class Strategy {
  Full,       ///< every redex
  Root,       ///< only the root
  Outermost,  ///< redexes with no redex strictly above them
  Innermost,  ///< redexes with no redex strictly below them
};

/// One rewrite step of a subject term over namespace `W` by a rule over
/// namespace `V`.
///
/// `rule` is the rule as listed; `subst` maps its variables to fragments of
/// the subject, so `subterm_at(subject, pos) == subst(rule.lhs)` and
/// `result == replace_at(subject, pos, subst(rule.rhs))`.
template <class F, class V, class W = V>
struct Reduct {
  Term<F, W> result;
  Position pos;
  Rule<F, V> rule;
  std::size_t rule_index = 0;
  GeneralizedSubstitution<F, V, W> subst;

  friend bool operator==(const Reduct&, const Reduct&) = default;
};

/// Throws InvalidRule for the first rule that is not a valid rewrite rule.
template <class F, class V>
void require_valid(const std::vector<Rule<F, V>>& rules) {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (!is_valid(rules[i])) throw InvalidRule(i, to_string(rules[i]));
  }
}

namespace detail {

// All reducts, ordered by position (preorder) then rule index. Rules are
// assumed valid.
template <class F, class V, class W>
std::vector<Reduct<F, V, W>> all_reducts(const std::vector<Rule<F, V>>& rules,
                                         const Term<F, W>& subject,
                                         bool root_only) {
  std::vector<Reduct<F, V, W>> out;
  auto visit = [&](const Term<F, W>& sub, const Position& p) {
    if (root_only && !p.is_root()) return;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      auto sigma = match(rules[i].lhs, sub);
      if (!sigma) continue;
      auto contractum = apply_generalized(*sigma, rules[i].rhs);
      out.push_back({replace_at(subject, p, std::move(*contractum)), p,
                     rules[i], i, std::move(*sigma)});
    }
  };
  for_each_position(subject, visit);
  return out;
}

}  // namespace detail

/// The one-step reducts of `subject`, ordered by position in preorder and
/// then by rule index. Throws InvalidRule.
template <class F, class V, class W>
std::vector<Reduct<F, V, W>> rewrite_step(const std::vector<Rule<F, V>>& rules,
                                          const Term<F, W>& subject,
                                          Strategy strategy = Strategy::Full) {
  require_valid(rules);
  auto all = detail::all_reducts(rules, subject, strategy == Strategy::Root);
  if (strategy == Strategy::Full || strategy == Strategy::Root) return all;

  std::vector<Position> redexes;
  for (const auto& r : all) {
    if (redexes.empty() || redexes.back() != r.pos) redexes.push_back(r.pos);
  }
  const auto blocked_by = strategy == Strategy::Outermost
                              ? PositionRelation::Below
                              : PositionRelation::Above;
  std::vector<Reduct<F, V, W>> out;
  for (auto& r : all) {
    const bool blocked =
        std::any_of(redexes.begin(), redexes.end(), [&](const Position& q) {
          return compare(r.pos, q) == blocked_by;
        });
    if (!blocked) out.push_back(std::move(r));
  }
  return out;
}

/// No rule applies anywhere in `t`. Throws InvalidRule.
template <class F, class V, class W>
bool is_normal_form(const std::vector<Rule<F, V>>& rules, const Term<F, W>& t) {
  require_valid(rules);
  bool redex = false;
  for_each_position(t, [&](const Term<F, W>& sub, const Position&) {
    if (redex) return;
    for (const auto& r : rules) {
      if (match(r.lhs, sub)) {
        redex = true;
        return;
      }
    }
  });
  return !redex;
}

/// Rule properties lifted to a list: conjunction for validity, linearity and
/// groundness; disjunction for duplicating, collapsing and erasing.
struct RulesProperties {
  bool valid = true;
  bool left_linear = true;
  bool right_linear = true;
  bool linear = true;
  bool duplicating = false;
  bool collapsing = false;
  bool erasing = false;
  bool ground = true;

  friend bool operator==(const RulesProperties&,
                         const RulesProperties&) = default;
};

template <class F, class V>
RulesProperties list_properties(const std::vector<Rule<F, V>>& rules) {
  RulesProperties out;
  for (const auto& r : rules) {
    const auto p = properties(r);
    out.valid = out.valid && is_valid(r);
    out.left_linear = out.left_linear && p.left_linear;
    out.right_linear = out.right_linear && p.right_linear;
    out.linear = out.linear && p.linear;
    out.ground = out.ground && p.ground;
    out.duplicating = out.duplicating || p.duplicating;
    out.collapsing = out.collapsing || p.collapsing;
    out.erasing = out.erasing || p.erasing;
  }
  return out;
}

const char* to_string(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& name);

/// `result @ pos by (lhs -> rhs) with {subst}`
template <class F, class V, class W>
std::ostream& operator<<(std::ostream& os, const Reduct<F, V, W>& r) {
  return os << r.result << " @ " << r.pos << " by (" << r.rule << ") with "
            << r.subst;
}

template <class F, class V, class W>
std::string to_string(const Reduct<F, V, W>& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace termrw

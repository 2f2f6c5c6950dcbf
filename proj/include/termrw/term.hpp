#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "termrw/errors.hpp"
#include "termrw/position.hpp"

namespace termrw {

/// A first-order term over function symbols `F` and variables `V`.
///
/// A term is either a variable leaf or a function symbol applied to a
/// (possibly empty) sequence of argument terms. Constants are applications
/// with no arguments. Terms are plain trees with structural equality; copies
/// are deep.
template <class F, class V>
class Term {
 public:
  using symbol_type = F;
  using variable_type = V;

  struct App {
    F symbol;
    std::vector<Term> args;
  };

  static Term var(V v) { return Term(std::move(v)); }
  static Term fun(F f, std::vector<Term> args = {}) {
    return Term(App{std::move(f), std::move(args)});
  }

  bool is_var() const { return std::holds_alternative<V>(node_); }
  bool is_fun() const { return !is_var(); }

  /// Precondition: is_var().
  const V& variable() const { return std::get<V>(node_); }
  /// Precondition: is_fun().
  const F& symbol() const { return std::get<App>(node_).symbol; }
  /// Arguments of an application; empty for variables.
  const std::vector<Term>& args() const {
    static const std::vector<Term> none;
    return is_var() ? none : std::get<App>(node_).args;
  }
  std::size_t arity() const { return args().size(); }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.is_var() != b.is_var()) return false;
    if (a.is_var()) return a.variable() == b.variable();
    return a.symbol() == b.symbol() && a.args() == b.args();
  }

 private:
  template <class F2, class V2>
  friend Term<F2, V2> replace_at(const Term<F2, V2>&, const Position&,
                                 Term<F2, V2>);

  explicit Term(V v) : node_(std::move(v)) {}
  explicit Term(App a) : node_(std::move(a)) {}

  std::vector<Term>& mutable_args() { return std::get<App>(node_).args; }

  std::variant<V, App> node_;
};

/// Structural recursion: variables via `on_var(v)`, applications via
/// `on_fun(f, folded_children)`.
template <class F, class V, class OnVar, class OnFun>
auto fold(const Term<F, V>& t, OnVar&& on_var, OnFun&& on_fun)
    -> std::invoke_result_t<OnVar&, const V&> {
  using A = std::invoke_result_t<OnVar&, const V&>;
  if (t.is_var()) return on_var(t.variable());
  std::vector<A> children;
  children.reserve(t.arity());
  for (const auto& a : t.args()) children.push_back(fold(a, on_var, on_fun));
  return on_fun(t.symbol(), std::move(children));
}

/// Relabels every variable with `fv` and every symbol with `ff`.
template <class F, class V, class FV, class FF>
auto map_symbols(const Term<F, V>& t, FV&& fv, FF&& ff) {
  using F2 = std::decay_t<std::invoke_result_t<FF&, const F&>>;
  using V2 = std::decay_t<std::invoke_result_t<FV&, const V&>>;
  if (t.is_var()) return Term<F2, V2>::var(fv(t.variable()));
  std::vector<Term<F2, V2>> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(map_symbols(a, fv, ff));
  return Term<F2, V2>::fun(ff(t.symbol()), std::move(args));
}

template <class F, class V, class FV>
auto map_vars(const Term<F, V>& t, FV&& fv) {
  return map_symbols(t, std::forward<FV>(fv), [](const F& f) { return f; });
}

namespace detail {

template <class F, class V, class Visit>
void preorder(const Term<F, V>& t, Visit& visit) {
  visit(t);
  for (const auto& a : t.args()) preorder(a, visit);
}

template <class F, class V, class Visit>
void preorder_positions(const Term<F, V>& t, Position& at, Visit& visit) {
  visit(t, static_cast<const Position&>(at));
  for (std::size_t i = 0; i < t.arity(); ++i) {
    at.push_back(i);
    preorder_positions(t.args()[i], at, visit);
    at.pop_back();
  }
}

}  // namespace detail

/// Calls `visit(subterm, position)` for every node in preorder.
template <class F, class V, class Visit>
void for_each_position(const Term<F, V>& t, Visit&& visit) {
  Position at;
  detail::preorder_positions(t, at, visit);
}

/// Variable occurrences in preorder, duplicates kept.
template <class F, class V>
std::vector<V> vars(const Term<F, V>& t) {
  std::vector<V> out;
  auto visit = [&](const Term<F, V>& s) {
    if (s.is_var()) out.push_back(s.variable());
  };
  detail::preorder(t, visit);
  return out;
}

/// Function-symbol occurrences in preorder, duplicates kept.
template <class F, class V>
std::vector<F> funs(const Term<F, V>& t) {
  std::vector<F> out;
  auto visit = [&](const Term<F, V>& s) {
    if (s.is_fun()) out.push_back(s.symbol());
  };
  detail::preorder(t, visit);
  return out;
}

template <class F, class V>
std::set<V> var_set(const Term<F, V>& t) {
  auto vs = vars(t);
  return std::set<V>(vs.begin(), vs.end());
}

/// All positions of `t` in preorder.
template <class F, class V>
std::vector<Position> positions(const Term<F, V>& t) {
  std::vector<Position> out;
  for_each_position(t, [&](const Term<F, V>&, const Position& p) {
    out.push_back(p);
  });
  return out;
}

template <class F, class V>
std::size_t size(const Term<F, V>& t) {
  std::size_t n = 1;
  for (const auto& a : t.args()) n += size(a);
  return n;
}

/// Depth of the tree; a leaf has depth 0.
template <class F, class V>
std::size_t depth(const Term<F, V>& t) {
  std::size_t d = 0;
  for (const auto& a : t.args()) d = std::max(d, depth(a) + 1);
  return d;
}

/// Throws InvalidPosition when `p` is not a position of `t`.
template <class F, class V>
const Term<F, V>& subterm_at(const Term<F, V>& t, const Position& p) {
  const Term<F, V>* cur = &t;
  for (std::size_t i : p) {
    if (i >= cur->arity()) throw InvalidPosition(p);
    cur = &cur->args()[i];
  }
  return *cur;
}

template <class F, class V>
bool is_position_of(const Term<F, V>& t, const Position& p) {
  const Term<F, V>* cur = &t;
  for (std::size_t i : p) {
    if (i >= cur->arity()) return false;
    cur = &cur->args()[i];
  }
  return true;
}

/// `t` with the subterm at `p` replaced by `s`. Throws InvalidPosition.
template <class F, class V>
Term<F, V> replace_at(const Term<F, V>& t, const Position& p, Term<F, V> s) {
  if (!is_position_of(t, p)) throw InvalidPosition(p);
  Term<F, V> out = t;
  Term<F, V>* cur = &out;
  for (std::size_t i : p) cur = &cur->mutable_args()[i];
  *cur = std::move(s);
  return out;
}

template <class F, class V>
bool is_ground(const Term<F, V>& t) {
  if (t.is_var()) return false;
  return std::all_of(t.args().begin(), t.args().end(),
                     [](const auto& a) { return is_ground(a); });
}

/// No variable occurs twice.
template <class F, class V>
bool is_linear(const Term<F, V>& t) {
  auto vs = vars(t);
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

// Rendering: `f(t1,...,tn)`, constants without parentheses.

template <class F, class V>
std::ostream& operator<<(std::ostream& os, const Term<F, V>& t) {
  if (t.is_var()) return os << t.variable();
  os << t.symbol();
  if (t.arity() == 0) return os;
  os << '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) os << ',';
    os << t.args()[i];
  }
  return os << ')';
}

template <class F, class V>
std::string to_string(const Term<F, V>& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

}  // namespace termrw

#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "termrw/term.hpp"

namespace termrw {

/// A finite map from variables to terms over the same variable namespace.
///
/// Identity bindings `x -> x` are never stored, so the domain is exactly the
/// set of variables the substitution moves. Application is total: variables
/// outside the domain are left untouched.
template <class F, class V>
class Substitution {
 public:
  using map_type = std::map<V, Term<F, V>>;

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const V, Term<F, V>>> init) {
    for (const auto& [v, t] : init) bind(v, t);
  }

  /// Adds or overwrites a binding. Identity bindings erase `v` instead.
  void bind(const V& v, Term<F, V> t) {
    if (t.is_var() && t.variable() == v) {
      map_.erase(v);
    } else {
      map_.insert_or_assign(v, std::move(t));
    }
  }

  const Term<F, V>* lookup(const V& v) const {
    auto it = map_.find(v);
    return it == map_.end() ? nullptr : &it->second;
  }

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }
  const map_type& bindings() const { return map_; }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  map_type map_;
};

/// A finite map from variables `V` to terms over another namespace `W`.
///
/// Application is partial: it fails on a variable outside the domain. This is
/// the shape matching produces, since pattern and subject variables need not
/// share a namespace.
template <class F, class V, class W = V>
class GeneralizedSubstitution {
 public:
  using map_type = std::map<V, Term<F, W>>;

  GeneralizedSubstitution() = default;
  GeneralizedSubstitution(
      std::initializer_list<std::pair<const V, Term<F, W>>> init)
      : map_(init) {}

  void bind(const V& v, Term<F, W> t) { map_.insert_or_assign(v, std::move(t)); }

  const Term<F, W>* lookup(const V& v) const {
    auto it = map_.find(v);
    return it == map_.end() ? nullptr : &it->second;
  }

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }
  const map_type& bindings() const { return map_; }

  friend bool operator==(const GeneralizedSubstitution&,
                         const GeneralizedSubstitution&) = default;

 private:
  map_type map_;
};

/// Applies `sigma` to every variable of `t`; unmapped variables stay.
template <class F, class V>
Term<F, V> substitute(const Substitution<F, V>& sigma, const Term<F, V>& t) {
  if (t.is_var()) {
    const auto* bound = sigma.lookup(t.variable());
    return bound ? *bound : t;
  }
  std::vector<Term<F, V>> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(substitute(sigma, a));
  return Term<F, V>::fun(t.symbol(), std::move(args));
}

/// Empty when `t` has a variable outside the domain of `sigma`.
template <class F, class V, class W>
std::optional<Term<F, W>> apply_generalized(
    const GeneralizedSubstitution<F, V, W>& sigma, const Term<F, V>& t) {
  if (t.is_var()) {
    const auto* bound = sigma.lookup(t.variable());
    if (!bound) return std::nullopt;
    return *bound;
  }
  std::vector<Term<F, W>> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) {
    auto r = apply_generalized(sigma, a);
    if (!r) return std::nullopt;
    args.push_back(std::move(*r));
  }
  return Term<F, W>::fun(t.symbol(), std::move(args));
}

/// The substitution that applies `sigma` first, then `tau`.
template <class F, class V>
Substitution<F, V> compose(const Substitution<F, V>& sigma,
                           const Substitution<F, V>& tau) {
  Substitution<F, V> out;
  for (const auto& [v, t] : sigma) out.bind(v, substitute(tau, t));
  for (const auto& [v, t] : tau) {
    if (!sigma.lookup(v)) out.bind(v, t);
  }
  return out;
}

template <class F, class V>
GeneralizedSubstitution<F, V, V> to_generalized(
    const Substitution<F, V>& sigma) {
  GeneralizedSubstitution<F, V, V> out;
  for (const auto& [v, t] : sigma) out.bind(v, t);
  return out;
}

/// Drops identity bindings; the result is total on every variable.
template <class F, class V>
Substitution<F, V> to_standard(const GeneralizedSubstitution<F, V, V>& sigma) {
  Substitution<F, V> out;
  for (const auto& [v, t] : sigma) out.bind(v, t);
  return out;
}

/// Extends `sigma` so that it sends `pattern` to `subject`. On failure
/// `sigma` may hold partial bindings.
template <class F, class V, class W>
bool match_into(const Term<F, V>& pattern, const Term<F, W>& subject,
                GeneralizedSubstitution<F, V, W>& sigma) {
  if (pattern.is_var()) {
    if (const auto* bound = sigma.lookup(pattern.variable())) {
      return *bound == subject;
    }
    sigma.bind(pattern.variable(), subject);
    return true;
  }
  if (subject.is_var() || pattern.symbol() != subject.symbol() ||
      pattern.arity() != subject.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_into(pattern.args()[i], subject.args()[i], sigma)) return false;
  }
  return true;
}

/// The substitution `sigma` with domain vars(pattern) and
/// `sigma(pattern) == subject`, if one exists.
template <class F, class V, class W>
std::optional<GeneralizedSubstitution<F, V, W>> match(
    const Term<F, V>& pattern, const Term<F, W>& subject) {
  GeneralizedSubstitution<F, V, W> sigma;
  if (!match_into(pattern, subject, sigma)) return std::nullopt;
  return sigma;
}

template <class F, class V>
bool occurs_in(const V& v, const Term<F, V>& t) {
  if (t.is_var()) return t.variable() == v;
  for (const auto& a : t.args()) {
    if (occurs_in(v, a)) return true;
  }
  return false;
}

/// Idempotent most general unifier of `s` and `t`, with occurs check.
///
/// Both terms must use one variable namespace; rename apart beforehand when
/// they come from different rules. Bindings are kept fully resolved, so the
/// result is applied in a single pass.
template <class F, class V>
std::optional<Substitution<F, V>> unify(const Term<F, V>& s,
                                        const Term<F, V>& t) {
  Substitution<F, V> sigma;
  std::vector<std::pair<Term<F, V>, Term<F, V>>> work;
  work.emplace_back(s, t);
  while (!work.empty()) {
    auto [a, b] = std::move(work.back());
    work.pop_back();
    a = substitute(sigma, a);
    b = substitute(sigma, b);
    if (a == b) continue;
    if (!a.is_var() && b.is_var()) std::swap(a, b);
    if (a.is_var()) {
      const V x = a.variable();
      if (occurs_in(x, b)) return std::nullopt;
      const Substitution<F, V> elim{{x, b}};
      Substitution<F, V> next;
      for (const auto& [v, u] : sigma) next.bind(v, substitute(elim, u));
      next.bind(x, std::move(b));
      sigma = std::move(next);
      continue;
    }
    if (a.symbol() != b.symbol() || a.arity() != b.arity()) {
      return std::nullopt;
    }
    for (std::size_t i = a.arity(); i-- > 0;) {
      work.emplace_back(a.args()[i], b.args()[i]);
    }
  }
  return sigma;
}

/// `t` is obtained from `u` by some substitution.
template <class F, class V>
bool is_instance_of(const Term<F, V>& t, const Term<F, V>& u) {
  return match(u, t).has_value();
}

/// `t` and `u` are equal up to variable renaming.
template <class F, class V>
bool is_variant_of(const Term<F, V>& t, const Term<F, V>& u) {
  return is_instance_of(t, u) && is_instance_of(u, t);
}

namespace detail {

template <class Map>
std::ostream& print_bindings(std::ostream& os, const Map& m) {
  os << '{';
  bool first = true;
  for (const auto& [v, t] : m) {
    if (!first) os << ", ";
    first = false;
    os << v << " -> " << t;
  }
  return os << '}';
}

}  // namespace detail

/// Renders `{x -> f(a), y -> b}`, ordered by variable.
template <class F, class V>
std::ostream& operator<<(std::ostream& os, const Substitution<F, V>& s) {
  return detail::print_bindings(os, s);
}

template <class F, class V, class W>
std::ostream& operator<<(std::ostream& os,
                         const GeneralizedSubstitution<F, V, W>& s) {
  return detail::print_bindings(os, s);
}

template <class F, class V>
std::string to_string(const Substitution<F, V>& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

template <class F, class V, class W>
std::string to_string(const GeneralizedSubstitution<F, V, W>& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

}  // namespace termrw

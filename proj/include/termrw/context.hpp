#pragma once

#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "termrw/errors.hpp"
#include "termrw/position.hpp"
#include "termrw/term.hpp"

namespace termrw {

/// A term with exactly one hole.
///
/// Stored as the spine from the root down to the hole: each frame holds the
/// symbol and the siblings to the left and right of the path.
template <class F, class V>
class Context {
 public:
  struct Frame {
    F symbol;
    std::vector<Term<F, V>> before;
    std::vector<Term<F, V>> after;

    friend bool operator==(const Frame&, const Frame&) = default;
  };

  /// The empty context `[]`.
  static Context hole() { return Context(); }

  /// Wraps `inner` as argument number `before.size()` of `symbol`.
  static Context wrap(F symbol, std::vector<Term<F, V>> before, Context inner,
                      std::vector<Term<F, V>> after) {
    inner.spine_.insert(inner.spine_.begin(),
                        Frame{std::move(symbol), std::move(before),
                              std::move(after)});
    return inner;
  }

  bool is_hole() const { return spine_.empty(); }
  const std::vector<Frame>& spine() const { return spine_; }

  friend bool operator==(const Context&, const Context&) = default;

 private:
  template <class F2, class V2>
  friend Context<F2, V2> of_term(const Term<F2, V2>&, const Position&);

  std::vector<Frame> spine_;
};

/// The context left behind when the subterm at `p` is cut out of `t`.
/// Throws InvalidPosition.
template <class F, class V>
Context<F, V> of_term(const Term<F, V>& t, const Position& p) {
  if (!is_position_of(t, p)) throw InvalidPosition(p);
  Context<F, V> c;
  const Term<F, V>* cur = &t;
  for (std::size_t i : p) {
    const auto& args = cur->args();
    c.spine_.push_back(typename Context<F, V>::Frame{
        cur->symbol(),
        std::vector<Term<F, V>>(args.begin(), args.begin() + i),
        std::vector<Term<F, V>>(args.begin() + i + 1, args.end())});
    cur = &args[i];
  }
  return c;
}

/// Fills the hole with `s`.
template <class F, class V>
Term<F, V> plug(const Context<F, V>& c, Term<F, V> s) {
  Term<F, V> acc = std::move(s);
  for (auto it = c.spine().rbegin(); it != c.spine().rend(); ++it) {
    std::vector<Term<F, V>> args;
    args.reserve(it->before.size() + 1 + it->after.size());
    args.insert(args.end(), it->before.begin(), it->before.end());
    args.push_back(std::move(acc));
    args.insert(args.end(), it->after.begin(), it->after.end());
    acc = Term<F, V>::fun(it->symbol, std::move(args));
  }
  return acc;
}

template <class F, class V>
Position hole_position(const Context<F, V>& c) {
  Position p;
  for (const auto& frame : c.spine()) p.push_back(frame.before.size());
  return p;
}

template <class F, class V>
std::ostream& operator<<(std::ostream& os, const Context<F, V>& c) {
  for (const auto& frame : c.spine()) {
    os << frame.symbol << '(';
    for (const auto& b : frame.before) os << b << ',';
  }
  os << "[]";
  for (auto it = c.spine().rbegin(); it != c.spine().rend(); ++it) {
    for (const auto& a : it->after) os << ',' << a;
    os << ')';
  }
  return os;
}

template <class F, class V>
std::string to_string(const Context<F, V>& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

}  // namespace termrw

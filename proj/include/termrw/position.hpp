#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace termrw {

/// How two positions relate in the prefix order.
enum class PositionRelation { Equal, Above, Below, Parallel };

/// A path of 0-based argument indices. The empty path is the root.
///
/// Positions carry no term; whether a position is valid for a given term is
/// decided by the term operations. The default ordering is lexicographic with
/// prefixes first, i.e. preorder.
class Position {
 public:
  using value_type = std::size_t;
  using const_iterator = std::vector<std::size_t>::const_iterator;

  Position() = default;
  Position(std::initializer_list<std::size_t> indices) : indices_(indices) {}
  explicit Position(std::vector<std::size_t> indices)
      : indices_(std::move(indices)) {}

  static Position root() { return {}; }

  bool is_root() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  const_iterator begin() const { return indices_.begin(); }
  const_iterator end() const { return indices_.end(); }
  const std::vector<std::size_t>& indices() const { return indices_; }

  void push_back(std::size_t i) { indices_.push_back(i); }
  void pop_back() { indices_.pop_back(); }

  /// The position one step further down, at argument `i`.
  Position child(std::size_t i) const {
    Position p = *this;
    p.indices_.push_back(i);
    return p;
  }

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;

 private:
  std::vector<std::size_t> indices_;
};

PositionRelation compare(const Position& p, const Position& q);

/// `p` followed by `q`.
Position concat(const Position& p, const Position& q);

/// True iff `p` is a proper prefix of `q`.
inline bool is_above(const Position& p, const Position& q) {
  return compare(p, q) == PositionRelation::Above;
}
inline bool is_below(const Position& p, const Position& q) {
  return compare(p, q) == PositionRelation::Below;
}
inline bool is_parallel(const Position& p, const Position& q) {
  return compare(p, q) == PositionRelation::Parallel;
}

/// Renders as `[0,1]`; the root renders as `[]`.
std::string to_string(const Position& p);
std::ostream& operator<<(std::ostream& os, const Position& p);

const char* to_string(PositionRelation r);

}  // namespace termrw

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "termrw/position.hpp"

namespace termrw {

/// A position that does not address a subterm of the term it was used on.
class InvalidPosition : public std::out_of_range {
 public:
  explicit InvalidPosition(Position p)
      : std::out_of_range("invalid position " + to_string(p)),
        position_(std::move(p)) {}
  const Position& position() const { return position_; }

 private:
  Position position_;
};

/// A rule with a variable left-hand side or fresh right-hand-side variables
/// was handed to an operation that requires valid rules.
class InvalidRule : public std::invalid_argument {
 public:
  InvalidRule(std::size_t index, const std::string& rendered)
      : std::invalid_argument("invalid rule " + std::to_string(index) + ": " +
                              rendered),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace termrw

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "termrw/analysis.hpp"
#include "termrw/rule.hpp"
#include "termrw/term.hpp"

namespace termrw {

// Concrete instantiation used for textual problems: symbols and variables
// are the identifiers as written.
using TrsTerm = Term<std::string, std::string>;
using TrsRule = Rule<std::string, std::string>;
using TrsSubstitution = Substitution<std::string, std::string>;
using TrsCriticalPair = CriticalPair<std::string, std::string>;
using TrsVerdict = ConfluenceVerdict<std::string, std::string>;

enum class ProblemStrategy { Full, Innermost, Outermost };

/// A section whose body is kept as raw text, e.g. `(THEORY ...)`.
struct RawSection {
  std::string key;
  std::string body;

  friend bool operator==(const RawSection&, const RawSection&) = default;
};

/// A problem in the WST (old TPDB) text format.
struct Problem {
  std::vector<std::string> variables;  ///< declaration order, no duplicates
  std::vector<TrsRule> strict_rules;   ///< `->`
  std::vector<TrsRule> weak_rules;     ///< `->=`
  std::optional<ProblemStrategy> strategy;
  std::optional<std::string> comment;
  std::vector<RawSection> preserved_sections;  ///< source order

  /// A THEORY section was kept verbatim; its semantics are not supported.
  bool has_theory() const;

  friend bool operator==(const Problem&, const Problem&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string reason);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

struct ParseOptions {
  /// Reject a symbol used with two different arities.
  bool check_arity = true;
};

/// Throws ParseError.
Problem parse_problem(std::string_view input, const ParseOptions& options = {});

/// Parses one complete term; identifiers in `variables` become variables.
/// Throws ParseError.
TrsTerm parse_term(std::string_view input,
                   const std::vector<std::string>& variables,
                   const ParseOptions& options = {});

/// Canonical text: VAR, RULES (strict then weak, one per line), STRATEGY,
/// preserved sections, then COMMENT.
std::string render_problem(const Problem& p);

const char* to_string(ProblemStrategy s);

class WeakRulesPresent : public std::invalid_argument {
 public:
  WeakRulesPresent()
      : std::invalid_argument(
            "local confluence check does not support weak (->=) rules") {}
};

/// Runs the local-confluence check on the strict rules. Throws
/// WeakRulesPresent or InvalidRule.
TrsVerdict check_local_confluence(const Problem& p, std::size_t fuel);

}  // namespace termrw

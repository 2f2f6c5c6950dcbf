#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "termrw/problem.hpp"

namespace termrw {

ParseError::ParseError(std::size_t line, std::size_t column, std::string reason)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + reason),
      line_(line),
      column_(column),
      reason_(std::move(reason)) {}

bool Problem::has_theory() const {
  return std::any_of(preserved_sections.begin(), preserved_sections.end(),
                     [](const RawSection& s) { return s.key == "THEORY"; });
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_delimiter(char c) {
  return is_space(c) || c == '(' || c == ')' || c == ',' || c == '"';
}

bool starts_arrow(std::string_view text, std::size_t at) {
  return text.compare(at, 2, "->") == 0;
}

/// Maps byte offsets to 1-based line/column.
class SourceMap {
 public:
  explicit SourceMap(std::string_view text) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') line_starts_.push_back(i + 1);
    }
  }

  [[noreturn]] void fail(std::size_t offset, std::string reason) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    const auto line = static_cast<std::size_t>(it - line_starts_.begin());
    throw ParseError(line, offset - *(it - 1) + 1, std::move(reason));
  }

 private:
  std::vector<std::size_t> line_starts_;
};

enum class Tok { LParen, RParen, Comma, Ident, Arrow, WeakArrow, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

/// Tokenizes text[begin, end). Identifiers are maximal runs of
/// non-delimiter bytes; `->` and `->=` always split off as arrows.
class Lexer {
 public:
  Lexer(std::string_view text, std::size_t begin, std::size_t end,
        const SourceMap& map)
      : text_(text), pos_(begin), end_(end), map_(&map) {}

  const Token& peek() {
    if (!peeked_) peeked_ = scan();
    return *peeked_;
  }

  Token next() {
    Token t = peek();
    peeked_.reset();
    return t;
  }

  std::size_t offset() const { return pos_; }
  const SourceMap& map() const { return *map_; }

 private:
  Token scan() {
    while (pos_ < end_ && is_space(text_[pos_])) ++pos_;
    if (pos_ >= end_) return {Tok::End, {}, end_};
    const std::size_t start = pos_;
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      return Token{k, text_.substr(start, 1), start};
    };
    if (c == '(') return single(Tok::LParen);
    if (c == ')') return single(Tok::RParen);
    if (c == ',') return single(Tok::Comma);
    if (c == '"') map_->fail(start, "unexpected '\"'");
    if (starts_arrow(text_.substr(0, end_), pos_)) {
      if (pos_ + 2 < end_ && text_[pos_ + 2] == '=') {
        pos_ += 3;
        return {Tok::WeakArrow, text_.substr(start, 3), start};
      }
      pos_ += 2;
      return {Tok::Arrow, text_.substr(start, 2), start};
    }
    while (pos_ < end_ && !is_delimiter(text_[pos_]) &&
           !starts_arrow(text_.substr(0, end_), pos_)) {
      ++pos_;
    }
    return {Tok::Ident, text_.substr(start, pos_ - start), start};
  }

  std::string_view text_;
  std::size_t pos_;
  std::size_t end_;
  const SourceMap* map_;
  std::optional<Token> peeked_;
};

struct ArityUse {
  std::size_t arity;
  std::size_t offset;
};

class TermParser {
 public:
  TermParser(Lexer& lex, const std::set<std::string>& variables,
             bool check_arity)
      : lex_(lex), variables_(variables), check_arity_(check_arity) {}

  TrsTerm term() {
    const Token head = lex_.next();
    if (head.kind == Tok::End) {
      lex_.map().fail(head.offset, "unbalanced parentheses");
    }
    if (head.kind != Tok::Ident) {
      lex_.map().fail(head.offset, "expected a term, found " + describe(head));
    }
    std::string name(head.text);
    const bool is_var = variables_.count(name) > 0;
    if (lex_.peek().kind != Tok::LParen) {
      if (is_var) return TrsTerm::var(std::move(name));
      note_arity(name, 0, head.offset);
      return TrsTerm::fun(std::move(name));
    }
    if (is_var) {
      lex_.map().fail(head.offset, "variable applied to arguments");
    }
    lex_.next();
    std::vector<TrsTerm> args;
    if (lex_.peek().kind == Tok::RParen) {
      lex_.next();
    } else {
      for (;;) {
        args.push_back(term());
        const Token sep = lex_.next();
        if (sep.kind == Tok::RParen) break;
        if (sep.kind == Tok::End) {
          lex_.map().fail(sep.offset, "unbalanced parentheses");
        }
        if (sep.kind != Tok::Comma) {
          lex_.map().fail(sep.offset,
                          "expected ',' or ')', found " + describe(sep));
        }
      }
    }
    note_arity(name, args.size(), head.offset);
    return TrsTerm::fun(std::move(name), std::move(args));
  }

 private:
  void note_arity(const std::string& f, std::size_t n, std::size_t offset) {
    if (!check_arity_) return;
    auto [it, fresh] = arities_.emplace(f, ArityUse{n, offset});
    if (!fresh && it->second.arity != n) {
      lex_.map().fail(offset, "inconsistent arity for '" + f + "': used with " +
                                  std::to_string(it->second.arity) + " and " +
                                  std::to_string(n) + " arguments");
    }
  }

  Lexer& lex_;
  const std::set<std::string>& variables_;
  bool check_arity_;
  // Shared across all rules of one problem.
  std::map<std::string, ArityUse> arities_;
};

struct SectionSpan {
  std::string key;
  std::size_t key_offset;
  std::size_t body_begin;  // just after the key
  std::size_t body_end;    // the closing parenthesis
};

// Finds the parenthesis closing a section whose body starts at `from`.
// Parentheses inside double-quoted strings are ignored.
std::size_t find_close(std::string_view text, std::size_t from,
                       std::size_t open_offset, const SourceMap& map) {
  int depth = 1;
  bool quoted = false;
  for (std::size_t i = from; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '"') {
      quoted = !quoted;
    } else if (!quoted && c == '(') {
      ++depth;
    } else if (!quoted && c == ')') {
      if (--depth == 0) return i;
    }
  }
  map.fail(open_offset, "unbalanced parentheses");
}

std::vector<SectionSpan> split_sections(std::string_view text,
                                        const SourceMap& map) {
  std::vector<SectionSpan> out;
  Lexer top(text, 0, text.size(), map);
  for (;;) {
    const Token open = top.next();
    if (open.kind == Tok::End) break;
    if (open.kind != Tok::LParen) {
      map.fail(open.offset, "expected '(' to start a section, found " +
                                describe(open));
    }
    const Token key = top.next();
    if (key.kind != Tok::Ident) {
      map.fail(key.offset, "expected a section name, found " + describe(key));
    }
    const std::size_t body_begin = key.offset + key.text.size();
    const std::size_t close = find_close(text, body_begin, open.offset, map);
    out.push_back({std::string(key.text), key.offset, body_begin, close});
    top = Lexer(text, close + 1, text.size(), map);
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

void expect_end(Lexer& lex) {
  const Token t = lex.next();
  if (t.kind != Tok::End) {
    lex.map().fail(t.offset, "unexpected " + describe(t));
  }
}

}  // namespace

Problem parse_problem(std::string_view input, const ParseOptions& options) {
  const SourceMap map(input);
  const auto sections = split_sections(input, map);

  Problem p;
  std::set<std::string> seen;
  auto once = [&](const SectionSpan& s) {
    if (!seen.insert(s.key).second) {
      map.fail(s.key_offset, "duplicate " + s.key + " section");
    }
  };

  // Variables first: VAR may follow RULES in the file.
  std::set<std::string> variables;
  for (const auto& s : sections) {
    if (s.key != "VAR") continue;
    once(s);
    Lexer lex(input, s.body_begin, s.body_end, map);
    for (Token t = lex.next(); t.kind != Tok::End; t = lex.next()) {
      if (t.kind != Tok::Ident) {
        map.fail(t.offset, "expected a variable name, found " + describe(t));
      }
      std::string v(t.text);
      if (variables.insert(v).second) p.variables.push_back(std::move(v));
    }
  }

  for (const auto& s : sections) {
    if (s.key == "VAR") continue;
    if (s.key == "RULES") {
      once(s);
      Lexer lex(input, s.body_begin, s.body_end, map);
      TermParser terms(lex, variables, options.check_arity);
      while (lex.peek().kind != Tok::End) {
        auto lhs = terms.term();
        const Token arrow = lex.next();
        if (arrow.kind != Tok::Arrow && arrow.kind != Tok::WeakArrow) {
          map.fail(arrow.offset, "missing arrow, found " + describe(arrow));
        }
        auto rhs = terms.term();
        auto& into =
            arrow.kind == Tok::Arrow ? p.strict_rules : p.weak_rules;
        into.push_back({std::move(lhs), std::move(rhs)});
      }
    } else if (s.key == "STRATEGY") {
      once(s);
      Lexer lex(input, s.body_begin, s.body_end, map);
      const Token t = lex.next();
      if (t.kind != Tok::Ident) {
        map.fail(t.offset, "expected a strategy, found " + describe(t));
      }
      if (t.text == "FULL") {
        p.strategy = ProblemStrategy::Full;
      } else if (t.text == "INNERMOST") {
        p.strategy = ProblemStrategy::Innermost;
      } else if (t.text == "OUTERMOST") {
        p.strategy = ProblemStrategy::Outermost;
      } else if (t.text == "CONTEXTSENSITIVE") {
        map.fail(t.offset, "unsupported STRATEGY keyword CONTEXTSENSITIVE");
      } else {
        map.fail(t.offset,
                 "unknown STRATEGY keyword '" + std::string(t.text) + "'");
      }
      expect_end(lex);
    } else if (s.key == "COMMENT") {
      once(s);
      p.comment = trim(input.substr(s.body_begin, s.body_end - s.body_begin));
    } else {
      p.preserved_sections.push_back(
          {s.key, trim(input.substr(s.body_begin, s.body_end - s.body_begin))});
    }
  }
  return p;
}

TrsTerm parse_term(std::string_view input,
                   const std::vector<std::string>& variables,
                   const ParseOptions& options) {
  const SourceMap map(input);
  const std::set<std::string> vs(variables.begin(), variables.end());
  Lexer lex(input, 0, input.size(), map);
  TermParser terms(lex, vs, options.check_arity);
  auto t = terms.term();
  const Token rest = lex.next();
  if (rest.kind == Tok::RParen) {
    map.fail(rest.offset, "unbalanced parentheses");
  }
  if (rest.kind != Tok::End) {
    map.fail(rest.offset, "trailing input " + describe(rest));
  }
  return t;
}

}  // namespace termrw

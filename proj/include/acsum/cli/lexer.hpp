#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acsum::cli {

/// Syntax error carrying a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Token {
  enum class Kind { identifier, integer, symbol, end };

  Kind kind = Kind::end;
  std::string text;
  int line = 1;
  int column = 1;

  bool is(char c) const { return kind == Kind::symbol && text.size() == 1 && text[0] == c; }
  bool is_word(std::string_view w) const { return kind == Kind::identifier && text == w; }
};

/// Whitespace-insensitive tokenizer shared by the query, polynomial and
/// bundle grammars. Identifiers are [A-Za-z_][A-Za-z0-9_]*, integers are
/// unsigned digit runs, everything else is a one-character symbol.
class Lexer {
 public:
  explicit Lexer(std::string_view text, int first_line = 1, int first_column = 1);

  const Token& peek() const { return current_; }
  Token next();

  /// Consumes the symbol `c` or throws.
  Token expect(char c);
  bool accept(char c);

  [[noreturn]] void fail(const std::string& message) const { fail_at(current_, message); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& message) {
    throw ParseError(message, t.line, t.column);
  }

  /// Throws unless all input has been consumed.
  void expect_end();

 private:
  void advance();

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
  Token current_;
};

std::string describe(const Token& t);

}  // namespace acsum::cli

#include "acsum/cli/lexer.hpp"

#include <cctype>

namespace acsum::cli {

Lexer::Lexer(std::string_view text, int first_line, int first_column)
    : text_(text), line_(first_line), column_(first_column) {
  advance();
}

void Lexer::advance() {
  auto bump = [this]() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  };
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();

  current_ = Token{};
  current_.line = line_;
  current_.column = column_;
  if (pos_ >= text_.size()) return;

  const char c = text_[pos_];
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    current_.kind = Token::Kind::identifier;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      current_.text += text_[pos_];
      bump();
    }
  } else if (std::isdigit(static_cast<unsigned char>(c))) {
    current_.kind = Token::Kind::integer;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      current_.text += text_[pos_];
      bump();
    }
  } else {
    current_.kind = Token::Kind::symbol;
    current_.text = std::string(1, c);
    bump();
  }
}

Token Lexer::next() {
  Token t = current_;
  advance();
  return t;
}

Token Lexer::expect(char c) {
  if (!current_.is(c)) fail("expected '" + std::string(1, c) + "', found " + describe(current_));
  return next();
}

bool Lexer::accept(char c) {
  if (!current_.is(c)) return false;
  advance();
  return true;
}

void Lexer::expect_end() {
  if (current_.kind != Token::Kind::end) fail("unexpected " + describe(current_));
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::end: return "end of input";
    case Token::Kind::integer: return "integer " + t.text;
    case Token::Kind::identifier: return "identifier '" + t.text + "'";
    case Token::Kind::symbol: return "'" + t.text + "'";
  }
  return "token";
}

}  // namespace acsum::cli

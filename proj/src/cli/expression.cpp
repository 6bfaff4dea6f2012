#include "acsum/cli/expression.hpp"

#include "acsum/cli/lexer.hpp"

#include <limits>

namespace acsum::cli {

namespace {

int to_int(const Token& t, Lexer& lex) {
  long long value = 0;
  for (char c : t.text) {
    value = value * 10 + (c - '0');
    if (value > std::numeric_limits<int>::max()) lex.fail_at(t, "integer " + t.text + " is too large");
  }
  return static_cast<int>(value);
}

ManifoldRef parse_manifold_ref(Lexer& lex) {
  const Token head = lex.peek();
  if (head.kind != Token::Kind::identifier) lex.fail("expected manifold name, found " + describe(head));
  lex.next();

  if (head.text == "conj") {
    lex.expect('(');
    ManifoldRef inner = parse_manifold_ref(lex);
    lex.expect(')');
    ++inner.conj_depth;
    return inner;
  }

  ManifoldRef ref;
  ref.name = head.text;
  if (lex.accept('(')) {
    std::vector<int> params;
    do {
      const Token t = lex.peek();
      if (t.kind != Token::Kind::integer) lex.fail("expected integer parameter, found " + describe(t));
      lex.next();
      params.push_back(to_int(t, lex));
    } while (lex.accept(','));
    lex.expect(')');
    ref.params = std::move(params);
  }
  return ref;
}

Term parse_term(Lexer& lex) {
  Term term;
  const Token t = lex.peek();
  if (t.kind == Token::Kind::integer) {
    lex.next();
    term.multiplicity = to_int(t, lex);
    if (term.multiplicity < 1) lex.fail_at(t, "multiplicity must be at least 1");
    if (term.multiplicity > kMaxMultiplicity)
      lex.fail_at(t, "multiplicity exceeds " + std::to_string(kMaxMultiplicity));
    lex.expect('*');
  }
  term.manifold = parse_manifold_ref(lex);
  return term;
}

}  // namespace

Expression parse(std::string_view text) {
  Lexer lex(text);
  Expression e;
  e.terms.push_back(parse_term(lex));
  while (lex.accept('#')) e.terms.push_back(parse_term(lex));
  lex.expect_end();
  return e;
}

ManifoldRef parse_manifold(std::string_view text) {
  Lexer lex(text);
  ManifoldRef m = parse_manifold_ref(lex);
  lex.expect_end();
  return m;
}

std::string print(const ManifoldRef& m) {
  std::string out = m.name;
  if (m.params) {
    out += "(";
    for (std::size_t i = 0; i < m.params->size(); ++i) out += (i ? "," : "") + std::to_string((*m.params)[i]);
    out += ")";
  }
  for (int i = 0; i < m.conj_depth; ++i) out = "conj(" + out + ")";
  return out;
}

std::string print(const Expression& e) {
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    if (i) out += " # ";
    if (e.terms[i].multiplicity != 1) out += std::to_string(e.terms[i].multiplicity) + "*";
    out += print(e.terms[i].manifold);
  }
  return out;
}

}  // namespace acsum::cli

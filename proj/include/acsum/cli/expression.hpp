#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acsum::cli {

/// MANIFOLD := IDENT ['(' PARAMS ')'] | 'conj' '(' MANIFOLD ')'
/// Nested conj(...) is flattened into conj_depth.
struct ManifoldRef {
  std::string name;
  std::optional<std::vector<int>> params;
  int conj_depth = 0;

  bool operator==(const ManifoldRef&) const = default;
};

/// TERM := [INT '*'] MANIFOLD
struct Term {
  int multiplicity = 1;
  ManifoldRef manifold;

  bool operator==(const Term&) const = default;
};

/// EXPR := TERM ('#' TERM)*
struct Expression {
  std::vector<Term> terms;

  bool operator==(const Expression&) const = default;
};

/// Parses a connected-sum query. Throws ParseError with line and column.
Expression parse(std::string_view text);

/// Parses a single MANIFOLD (no multiplicity, no '#').
ManifoldRef parse_manifold(std::string_view text);

std::string print(const ManifoldRef& m);
std::string print(const Expression& e);

/// Largest multiplicity accepted in a query.
inline constexpr int kMaxMultiplicity = 1'000'000;

}  // namespace acsum::cli

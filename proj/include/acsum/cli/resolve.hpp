#pragma once

#include "acsum/cli/expression.hpp"
#include "acsum/cli/input.hpp"
#include "acsum/decision.hpp"
#include "acsum/registry.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace acsum::cli {

class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A query expanded to one descriptor and one candidate list per summand.
struct ResolvedQuery {
  Expression expression;
  std::vector<ManifoldDescriptor> summands;
  SearchSpace space;
};

/// Built-in registry plus user definitions and structure overrides.
class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(InputSet inputs);

  /// Resolves a single manifold reference, applying any structure override.
  RegistryEntry lookup(const ManifoldRef& ref) const;

  ResolvedQuery resolve(const Expression& expr, std::uint64_t bound = 1'000'000) const;

  const ModulusTable& moduli() const { return inputs_.moduli; }

 private:
  RegistryEntry lookup_base(const ManifoldRef& ref) const;

  InputSet inputs_;
  std::map<std::string, StructureBlock> overrides_;  // keyed by resolved label
};

}  // namespace acsum::cli

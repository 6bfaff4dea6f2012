#include "acsum/cli/resolve.hpp"

namespace acsum::cli {

Catalog::Catalog(InputSet inputs) : inputs_(std::move(inputs)) {
  for (const auto& o : inputs_.overrides) {
    const std::string label = lookup_base(o.target).descriptor.label;
    if (!overrides_.emplace(label, o.block).second)
      throw ResolutionError(o.block.source + ": structures for '" + label + "' are given twice");
  }
}

RegistryEntry Catalog::lookup_base(const ManifoldRef& ref) const {
  RegistryEntry entry;
  if (auto it = inputs_.manifolds.find(ref.name); it != inputs_.manifolds.end()) {
    if (ref.params) throw ResolutionError("manifold '" + ref.name + "' takes no parameters");
    entry = it->second;
  } else if (is_builtin_name(ref.name)) {
    try {
      entry = builtin(ref.name, ref.params.value_or(std::vector<int>{}));
    } catch (const std::invalid_argument& e) {
      throw ResolutionError(std::string("cannot resolve '") + print(ref) + "': " + e.what());
    }
  } else {
    throw ResolutionError("unknown manifold '" + ref.name + "'");
  }
  if (ref.conj_depth % 2 == 1) entry = conjugate_entry(entry);
  return entry;
}

RegistryEntry Catalog::lookup(const ManifoldRef& ref) const {
  RegistryEntry entry = lookup_base(ref);
  if (auto it = overrides_.find(entry.descriptor.label); it != overrides_.end()) {
    entry.canonical_structures = it->second.compile(entry.descriptor);
    entry.notes.push_back("candidate structures from " + it->second.source);
  }
  return entry;
}

ResolvedQuery Catalog::resolve(const Expression& expr, std::uint64_t bound) const {
  ResolvedQuery q;
  q.expression = expr;
  q.space.bound = bound;
  for (const auto& term : expr.terms) {
    const RegistryEntry entry = lookup(term.manifold);
    for (int i = 0; i < term.multiplicity; ++i) {
      q.summands.push_back(entry.descriptor);
      q.space.candidates.push_back(entry.canonical_structures);
    }
  }
  return q;
}

}  // namespace acsum::cli

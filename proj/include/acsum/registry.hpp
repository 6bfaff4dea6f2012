#pragma once

#include "acsum/decision.hpp"
#include "acsum/manifold.hpp"

#include <string>
#include <vector>

namespace acsum {

/// A built-in or user-defined atomic manifold together with the stable
/// structures offered for it by default.
struct RegistryEntry {
  ManifoldDescriptor descriptor;
  std::vector<Candidate> canonical_structures;
  std::vector<std::string> notes;  // facts taken on outside authority

  // Set for built-ins; drives orientation reversal of projective spaces.
  std::string builtin_name;
  std::vector<int> builtin_params;

  bool has_honest_acs() const;
};

/// Names accepted by builtin().
const std::vector<std::string>& builtin_names();
bool is_builtin_name(const std::string& name);

/// CP(n), conjCP(n), Sphere(k) = S^{2k}, SphereProduct(a,b) = S^{2a} x S^{2b}, HP2.
/// Throws std::invalid_argument for unknown names or bad parameters.
RegistryEntry builtin(const std::string& name, const std::vector<int>& params);

/// The same manifold with the opposite orientation. CP(n) and conjCP(n) map
/// to each other; otherwise aggregates are kept, trivial stubs have their
/// Chern number negated, and honest structures are dropped.
RegistryEntry conjugate_entry(const RegistryEntry& entry);

/// Built-ins of the given dimension that carry an honest almost complex
/// structure: CP, and sphere products of S^2 and S^6.
std::vector<RegistryEntry> almost_complex_catalog(int dimension);

}  // namespace acsum

#pragma once

#include "acsum/integer.hpp"
#include "acsum/manifold.hpp"
#include "acsum/stable_structure.hpp"

#include <map>
#include <optional>
#include <vector>

namespace acsum {

/// The top obstruction k * o[S^{2n}] to extending an almost complex structure
/// from M minus a disc over M. When the order d of o[S^{2n}] is configured,
/// k is kept reduced into [0, d).
class ObstructionCoefficient {
 public:
  ObstructionCoefficient(Integer k, int half_dimension, std::optional<Integer> modulus = std::nullopt);

  const Integer& k() const { return k_; }
  int half_dimension() const { return half_dimension_; }
  const std::optional<Integer>& modulus() const { return modulus_; }

  bool operator==(const ObstructionCoefficient&) const = default;

 private:
  Integer k_;
  int half_dimension_;
  std::optional<Integer> modulus_;
};

/// Configured orders of o[S^{2n}], keyed by n.
using ModulusTable = std::map<int, Integer>;

inline std::optional<Integer> modulus_for(const ModulusTable& table, int half_dimension) {
  auto it = table.find(half_dimension);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

/// k = (chi(M) - c_n)/2, or 0 for an honest almost complex structure. Throws
/// std::invalid_argument when chi and c_n have different parity.
ObstructionCoefficient obstruction_from_stable(const ManifoldDescriptor& m, const StableStructure& s,
                                               std::optional<Integer> modulus = std::nullopt);

/// Obstruction of the connected sum with the summed structure:
/// sum k_i - (alpha - 1).
ObstructionCoefficient sum_obstruction(const std::vector<ObstructionCoefficient>& parts);

/// True iff k = 0, or k = 0 modulo the configured order.
bool vanishes(const ObstructionCoefficient& c);

}  // namespace acsum

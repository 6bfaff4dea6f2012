#pragma once

#include "acsum/graded_ring.hpp"
#include "acsum/integer.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace acsum {

/// A partition i_1 <= ... <= i_r of n, naming the Pontrjagin number
/// <p_{i_1} ... p_{i_r}, [M]> of a 4n-manifold.
using Partition = std::vector<int>;

/// Canonical label such as "p2", "p1^2", "p1p2".
std::string partition_label(const Partition& p);

/// All partitions of n, each sorted ascending, in lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Keyed by partition label.
using PontrjaginNumbers = std::map<std::string, Integer>;

/// A closed oriented even-dimensional manifold as seen by the engine: either an
/// atomic manifold with a cohomology presentation, or a formal connected sum
/// that only carries the additive invariants.
struct ManifoldDescriptor {
  enum class Flavor { atomic, formal_sum };

  std::string label;
  int dimension = 0;
  Integer euler_characteristic = 0;
  Integer signature = 0;
  RingPtr cohomology;                                        // atomic only, optional
  int orientation_sign = 1;                                  // pairing of top monomial with [M]
  std::optional<std::vector<RingElement>> pontrjagin_classes;  // p_1, p_2, ...
  PontrjaginNumbers pontrjagin_numbers;
  std::optional<int> connectivity;
  Flavor flavor = Flavor::atomic;
  std::vector<std::string> summands;  // formal_sum only

  bool is_atomic() const { return flavor == Flavor::atomic; }
  int half_dimension() const { return dimension / 2; }

  /// Throws std::invalid_argument when a structural invariant is violated.
  void validate() const;

  /// Structural equality (rings compared by presentation, not by pointer).
  bool operator==(const ManifoldDescriptor& other) const;
};

/// Builds an atomic descriptor from cohomology and Pontrjagin classes; the
/// Pontrjagin numbers are derived. Validates the result.
ManifoldDescriptor make_atomic(std::string label, int dimension, Integer euler_characteristic,
                               Integer signature, RingPtr cohomology, int orientation_sign,
                               std::vector<RingElement> pontrjagin_classes,
                               std::optional<int> connectivity);

/// <a, [M]>: coefficient of the top monomial times the orientation sign.
Integer kronecker_pair(const RingElement& a, const ManifoldDescriptor& m);

/// Same manifold, opposite orientation. An involution on every field.
ManifoldDescriptor reverse_orientation(const ManifoldDescriptor& m);

/// Formal connected sum of the summands in order. A single summand is
/// returned unchanged.
ManifoldDescriptor connected_sum(const std::vector<ManifoldDescriptor>& summands);

/// Pontrjagin numbers: computed from the classes for atomic manifolds, the
/// aggregated values for formal sums. Empty when 4 does not divide the dimension.
PontrjaginNumbers pontrjagin_numbers_of(const ManifoldDescriptor& m);

}  // namespace acsum

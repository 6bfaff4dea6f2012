#pragma once

#include "acsum/graded_ring.hpp"
#include "acsum/manifold.hpp"

#include <string>
#include <variant>
#include <vector>

namespace acsum {

/// multiplicity copies of a line bundle with the given first Chern class, or
/// of its conjugate.
struct LineBundleSummand {
  RingElement first_chern;
  int multiplicity = 1;
  bool conjugated = false;

  bool operator==(const LineBundleSummand&) const = default;
};

/// Formal Whitney sum of line bundles over an atomic base, standing in for a
/// stable almost complex structure.
struct LineBundleAggregate {
  RingPtr base;  // cohomology ring of the base manifold
  std::vector<LineBundleSummand> summands;
  std::string label;

  /// Throws std::invalid_argument unless every first Chern class is a
  /// degree-2 class of `base` and every multiplicity is positive.
  void validate() const;

  bool operator==(const LineBundleAggregate& other) const;
};

/// Stable structure known only through its top Chern number (for stably
/// parallelizable bases).
struct TrivialWithChern {
  Integer top_chern_number = 0;
  bool operator==(const TrivialWithChern&) const = default;
};

/// Marker for a genuine almost complex structure: its top obstruction is 0.
struct HonestAcs {
  bool operator==(const HonestAcs&) const = default;
};

using StableStructure = std::variant<LineBundleAggregate, TrivialWithChern, HonestAcs>;

/// The conjugate aggregate: every summand's conjugation flag flipped.
LineBundleAggregate conjugate(const LineBundleAggregate& agg);

/// Product over summands of (1 +/- c_1)^multiplicity in the base ring.
RingElement total_chern(const LineBundleAggregate& agg);

/// <c_n, [M]> for a structure on the 2n-manifold M. Throws for HonestAcs,
/// which carries no stable Chern data.
Integer top_chern_number(const StableStructure& s, const ManifoldDescriptor& m);

/// Necessary condition for agg_R to be stably isomorphic to TM: the
/// alternating total Pontrjagin class of the realification, c(agg) c(conj agg),
/// must equal sum_i (-1)^i p_i(M).
bool realification_check(const LineBundleAggregate& agg, const ManifoldDescriptor& m);

/// Human-readable description, e.g. "3*gamma + 2*conj(gamma)" or "trivial(c_n=4)".
std::string describe(const StableStructure& s);

}  // namespace acsum

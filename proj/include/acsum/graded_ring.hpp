#pragma once

#include "acsum/integer.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace acsum {

/// Exponent vector, one entry per generator.
using Monomial = std::vector<int>;

/// Truncated polynomial ring Z[x_1..x_k]/(x_1^{e_1+1}, ..., x_k^{e_k+1}) with
/// even-degree generators, used as the integral cohomology ring of a closed
/// 2n-manifold. `top_monomial` is the monomial dual to the fundamental class.
class RingPresentation {
 public:
  struct Generator {
    std::string name;
    int degree = 2;
    int truncation = 1;  // x^{truncation+1} = 0

    bool operator==(const Generator&) const = default;
  };

  /// Validates and builds a presentation; throws std::invalid_argument.
  static std::shared_ptr<const RingPresentation> create(std::vector<Generator> generators,
                                                        int total_dimension,
                                                        Monomial top_monomial);

  const std::vector<Generator>& generators() const { return generators_; }
  int total_dimension() const { return total_dimension_; }
  const Monomial& top_monomial() const { return top_; }
  std::size_t rank() const { return generators_.size(); }

  /// Index of the generator called `name`, or -1.
  int find(const std::string& name) const;

  int degree(const Monomial& m) const;

  /// True when `m` survives both the truncation and the dimension bound.
  bool representable(const Monomial& m) const;

  bool operator==(const RingPresentation& other) const;

 private:
  RingPresentation() = default;

  std::vector<Generator> generators_;
  int total_dimension_ = 0;
  Monomial top_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

/// Structural equality; identical pointers short-circuit.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Immutable element of a truncated graded ring. Terms are stored sorted by
/// exponent vector, with no zero coefficients and no vanishing monomials, so
/// equality is structural.
class RingElement {
 public:
  using Terms = std::map<Monomial, Integer>;

  static RingElement zero(RingPtr ring);
  static RingElement constant(RingPtr ring, const Integer& value);
  static RingElement one(RingPtr ring) { return constant(std::move(ring), 1); }
  static RingElement term(RingPtr ring, Monomial m, const Integer& coefficient);
  /// The generator with the given name; throws std::invalid_argument if absent.
  static RingElement generator(RingPtr ring, const std::string& name);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Monomial& m) const;

  /// Sum of the terms of exact degree `degree`. Throws on odd or out-of-range degree.
  RingElement component(int degree) const;

  /// Zero counts as homogeneous of every degree.
  bool is_homogeneous(int degree) const;

  /// Applies the ring automorphism that negates every degree-2 class: the
  /// degree-2d part is multiplied by (-1)^d.
  RingElement conjugate() const;

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const Integer& s, const RingElement& a);

  bool operator==(const RingElement& other) const;

  /// Human-readable form, e.g. "1 + x - 2*x^2". Deterministic.
  std::string to_string() const;

 private:
  RingElement(RingPtr ring, Terms terms);
  void normalize();

  RingPtr ring_;
  Terms terms_;
};

/// Repeated multiplication; power(a, 0) is 1.
RingElement power(const RingElement& a, unsigned exponent);

/// Sum of terms of exact degree `degree`.
inline RingElement component(const RingElement& a, int degree) { return a.component(degree); }

}  // namespace acsum

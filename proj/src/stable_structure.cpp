#include "acsum/stable_structure.hpp"

#include <stdexcept>

namespace acsum {

void LineBundleAggregate::validate() const {
  if (!base) throw std::invalid_argument("aggregate '" + label + "': no base ring");
  for (const auto& s : summands) {
    if (!same_ring(s.first_chern.ring(), base))
      throw std::invalid_argument("aggregate '" + label + "': first Chern class outside the base ring");
    if (!s.first_chern.is_homogeneous(2))
      throw std::invalid_argument("aggregate '" + label + "': first Chern class " + s.first_chern.to_string() +
                                  " is not homogeneous of degree 2");
    if (s.multiplicity < 1) throw std::invalid_argument("aggregate '" + label + "': multiplicity must be positive");
  }
}

bool LineBundleAggregate::operator==(const LineBundleAggregate& other) const {
  return same_ring(base, other.base) && summands == other.summands && label == other.label;
}

LineBundleAggregate conjugate(const LineBundleAggregate& agg) {
  LineBundleAggregate out = agg;
  for (auto& s : out.summands) s.conjugated = !s.conjugated;
  out.label = "conj(" + agg.label + ")";
  return out;
}

RingElement total_chern(const LineBundleAggregate& agg) {
  agg.validate();
  RingElement c = RingElement::one(agg.base);
  for (const auto& s : agg.summands) {
    const RingElement c1 = s.conjugated ? -s.first_chern : s.first_chern;
    c = c * power(RingElement::one(agg.base) + c1, static_cast<unsigned>(s.multiplicity));
  }
  return c;
}

Integer top_chern_number(const StableStructure& s, const ManifoldDescriptor& m) {
  if (std::holds_alternative<HonestAcs>(s))
    throw std::invalid_argument("top_chern_number: honest almost complex structure carries no stable Chern data");
  if (const auto* t = std::get_if<TrivialWithChern>(&s)) return t->top_chern_number;
  const auto& agg = std::get<LineBundleAggregate>(s);
  if (!m.is_atomic()) throw std::invalid_argument("top_chern_number: '" + m.label + "' is not atomic");
  return kronecker_pair(total_chern(agg).component(m.dimension), m);
}

bool realification_check(const LineBundleAggregate& agg, const ManifoldDescriptor& m) {
  if (!m.pontrjagin_classes || !m.cohomology)
    throw std::invalid_argument("realification_check: '" + m.label + "' has no Pontrjagin classes");
  if (!same_ring(agg.base, m.cohomology))
    throw std::invalid_argument("realification_check: aggregate lives over a different ring");
  const RingElement lhs = total_chern(agg) * total_chern(conjugate(agg));
  RingElement rhs = RingElement::one(m.cohomology);
  for (std::size_t i = 0; i < m.pontrjagin_classes->size(); ++i) {
    const auto& p = (*m.pontrjagin_classes)[i];
    rhs = (i % 2 == 0) ? rhs - p : rhs + p;  // p_{i+1} carries sign (-1)^{i+1}
  }
  return lhs == rhs;
}

std::string describe(const StableStructure& s) {
  if (std::holds_alternative<HonestAcs>(s)) return "std";
  if (const auto* t = std::get_if<TrivialWithChern>(&s)) return "trivial(c_n=" + t->top_chern_number.str() + ")";
  const auto& agg = std::get<LineBundleAggregate>(s);
  if (agg.summands.empty()) return "trivial";
  std::string out;
  for (const auto& summand : agg.summands) {
    if (!out.empty()) out += " + ";
    if (summand.multiplicity != 1) out += std::to_string(summand.multiplicity) + "*";
    const std::string c1 = "L(" + summand.first_chern.to_string() + ")";
    out += summand.conjugated ? "conj(" + c1 + ")" : c1;
  }
  return out;
}

}  // namespace acsum

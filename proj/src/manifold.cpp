#include "acsum/manifold.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace acsum {

std::string partition_label(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    out += "p" + std::to_string(p[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition current;
  std::function<void(int, int)> rec = [&](int remaining, int smallest) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = smallest; part <= remaining; ++part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  if (n > 0) rec(n, 1);
  return out;
}

bool ManifoldDescriptor::operator==(const ManifoldDescriptor& other) const {
  return label == other.label && dimension == other.dimension &&
         euler_characteristic == other.euler_characteristic && signature == other.signature &&
         (cohomology ? same_ring(cohomology, other.cohomology) : !other.cohomology) &&
         orientation_sign == other.orientation_sign && pontrjagin_classes == other.pontrjagin_classes &&
         pontrjagin_numbers == other.pontrjagin_numbers && connectivity == other.connectivity &&
         flavor == other.flavor && summands == other.summands;
}

void ManifoldDescriptor::validate() const {
  auto fail = [this](const std::string& what) {
    throw std::invalid_argument("manifold '" + label + "': " + what);
  };
  if (dimension < 2 || dimension % 2 != 0) fail("dimension must be even and >= 2");
  if (dimension % 4 == 2 && signature != 0) fail("signature must be 0 in dimension 2 mod 4");
  if (orientation_sign != 1 && orientation_sign != -1) fail("orientation sign must be +1 or -1");
  if (connectivity && *connectivity < 0) fail("connectivity must be non-negative");
  if (flavor == Flavor::formal_sum) {
    if (summands.size() < 2) fail("formal sum needs at least two summands");
    if (cohomology) fail("formal sum carries no cohomology");
    return;
  }
  if (cohomology && cohomology->total_dimension() != dimension)
    fail("cohomology top degree differs from dimension");
  if (pontrjagin_classes) {
    if (!cohomology) fail("Pontrjagin classes need a cohomology presentation");
    for (std::size_t i = 0; i < pontrjagin_classes->size(); ++i) {
      const auto& p = (*pontrjagin_classes)[i];
      if (!same_ring(p.ring(), cohomology)) fail("Pontrjagin class in a foreign ring");
      if (!p.is_homogeneous(4 * static_cast<int>(i + 1)))
        fail("p" + std::to_string(i + 1) + " is not homogeneous of degree " + std::to_string(4 * (i + 1)));
    }
  }
}

Integer kronecker_pair(const RingElement& a, const ManifoldDescriptor& m) {
  if (!m.is_atomic() || !m.cohomology) throw std::invalid_argument("kronecker_pair: '" + m.label + "' has no cohomology data");
  if (!same_ring(a.ring(), m.cohomology)) throw std::invalid_argument("kronecker_pair: presentation mismatch");
  if (!a.is_homogeneous(m.dimension))
    throw std::invalid_argument("kronecker_pair: class is not homogeneous of top degree");
  return a.coefficient(m.cohomology->top_monomial()) * m.orientation_sign;
}

namespace {

Integer product_number(const ManifoldDescriptor& m, const Partition& partition) {
  const auto& classes = *m.pontrjagin_classes;
  RingElement product = RingElement::one(m.cohomology);
  for (int i : partition) {
    if (static_cast<std::size_t>(i) > classes.size()) return 0;
    product = product * classes[static_cast<std::size_t>(i - 1)];
  }
  return kronecker_pair(product, m);
}

std::string wrap_conj(const std::string& label) {
  const std::string prefix = "conj(";
  if (label.size() > prefix.size() + 1 && label.compare(0, prefix.size(), prefix) == 0 && label.back() == ')') {
    // Unwrap only if the outer parentheses match each other.
    int depth = 0;
    bool outer = true;
    for (std::size_t i = prefix.size() - 1; i + 1 < label.size(); ++i) {
      if (label[i] == '(') ++depth;
      if (label[i] == ')') --depth;
      if (depth == 0) {
        outer = false;
        break;
      }
    }
    if (outer) return label.substr(prefix.size(), label.size() - prefix.size() - 1);
  }
  return prefix + label + ")";
}

}  // namespace

ManifoldDescriptor make_atomic(std::string label, int dimension, Integer euler_characteristic,
                               Integer signature, RingPtr cohomology, int orientation_sign,
                               std::vector<RingElement> pontrjagin_classes,
                               std::optional<int> connectivity) {
  ManifoldDescriptor m;
  m.label = std::move(label);
  m.dimension = dimension;
  m.euler_characteristic = std::move(euler_characteristic);
  m.signature = std::move(signature);
  m.cohomology = std::move(cohomology);
  m.orientation_sign = orientation_sign;
  m.pontrjagin_classes = std::move(pontrjagin_classes);
  m.connectivity = connectivity;
  m.validate();
  m.pontrjagin_numbers = pontrjagin_numbers_of(m);
  return m;
}

ManifoldDescriptor reverse_orientation(const ManifoldDescriptor& m) {
  ManifoldDescriptor r = m;
  r.label = wrap_conj(m.label);
  r.signature = -m.signature;
  r.orientation_sign = -m.orientation_sign;
  for (auto& [key, value] : r.pontrjagin_numbers) value = -value;
  for (auto& s : r.summands) s = wrap_conj(s);
  return r;
}

ManifoldDescriptor connected_sum(const std::vector<ManifoldDescriptor>& summands) {
  if (summands.empty()) throw std::invalid_argument("connected_sum: empty list");
  if (summands.size() == 1) return summands.front();

  ManifoldDescriptor out;
  out.flavor = ManifoldDescriptor::Flavor::formal_sum;
  out.dimension = summands.front().dimension;
  const auto alpha = static_cast<long>(summands.size());
  out.euler_characteristic = -2 * Integer(alpha - 1);
  std::optional<int> connectivity;
  bool connectivity_known = true;
  for (const auto& s : summands) {
    if (s.dimension != out.dimension)
      throw std::invalid_argument("connected_sum: dimension mismatch (" + std::to_string(s.dimension) + " vs " +
                                  std::to_string(out.dimension) + ")");
    out.euler_characteristic += s.euler_characteristic;
    out.signature += s.signature;
    for (const auto& [key, value] : s.pontrjagin_numbers) out.pontrjagin_numbers[key] += value;
    if (s.flavor == ManifoldDescriptor::Flavor::formal_sum)
      out.summands.insert(out.summands.end(), s.summands.begin(), s.summands.end());
    else
      out.summands.push_back(s.label);
    if (!s.connectivity)
      connectivity_known = false;
    else
      connectivity = connectivity ? std::min(*connectivity, *s.connectivity) : *s.connectivity;
  }
  if (connectivity_known) out.connectivity = connectivity;
  for (std::size_t i = 0; i < out.summands.size(); ++i) out.label += (i ? " # " : "") + out.summands[i];
  return out;
}

PontrjaginNumbers pontrjagin_numbers_of(const ManifoldDescriptor& m) {
  if (m.dimension % 4 != 0) return {};
  if (!m.is_atomic() || !m.pontrjagin_classes) return m.pontrjagin_numbers;
  PontrjaginNumbers out;
  for (const auto& partition : partitions_of(m.dimension / 4))
    out[partition_label(partition)] = product_number(m, partition);
  return out;
}

}  // namespace acsum

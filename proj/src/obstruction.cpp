#include "acsum/obstruction.hpp"

#include <stdexcept>

namespace acsum {

ObstructionCoefficient::ObstructionCoefficient(Integer k, int half_dimension, std::optional<Integer> modulus)
    : k_(std::move(k)), half_dimension_(half_dimension), modulus_(std::move(modulus)) {
  if (half_dimension_ < 1) throw std::invalid_argument("obstruction: half dimension must be positive");
  if (modulus_) {
    if (*modulus_ < 1) throw std::invalid_argument("obstruction: modulus must be positive");
    k_ = floor_mod(k_, *modulus_);
  }
}

ObstructionCoefficient obstruction_from_stable(const ManifoldDescriptor& m, const StableStructure& s,
                                               std::optional<Integer> modulus) {
  if (!m.is_atomic()) throw std::invalid_argument("obstruction: '" + m.label + "' is not atomic");
  if (std::holds_alternative<HonestAcs>(s)) return {0, m.half_dimension(), std::move(modulus)};
  const Integer cn = top_chern_number(s, m);
  const Integer difference = m.euler_characteristic - cn;
  if (floor_mod(difference, 2) != 0)
    throw std::invalid_argument("obstruction: chi(" + m.label + ") = " + m.euler_characteristic.str() +
                                " and c_n = " + cn.str() + " differ in parity");
  return {difference / 2, m.half_dimension(), std::move(modulus)};
}

ObstructionCoefficient sum_obstruction(const std::vector<ObstructionCoefficient>& parts) {
  if (parts.empty()) throw std::invalid_argument("sum_obstruction: empty list");
  const int n = parts.front().half_dimension();
  const auto& modulus = parts.front().modulus();
  Integer k = 0;
  for (const auto& p : parts) {
    if (p.half_dimension() != n) throw std::invalid_argument("sum_obstruction: dimension mismatch");
    if (p.modulus() != modulus) throw std::invalid_argument("sum_obstruction: mixed moduli");
    k += p.k();
  }
  k -= Integer(parts.size() - 1);
  return {std::move(k), n, modulus};
}

bool vanishes(const ObstructionCoefficient& c) {
  if (c.k() == 0) return true;
  return c.modulus() && floor_mod(c.k(), *c.modulus()) == 0;
}

}  // namespace acsum

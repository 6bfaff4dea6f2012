#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace acsum {

/// Exact unbounded integer used for every coefficient and characteristic number.
using Integer = boost::multiprecision::cpp_int;

/// Representative of `value` modulo `modulus` in [0, modulus).
inline Integer floor_mod(const Integer& value, const Integer& modulus) {
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

inline std::string to_string(const Integer& value) { return value.str(); }

}  // namespace acsum

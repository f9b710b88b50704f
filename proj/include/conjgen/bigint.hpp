#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace conjgen {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace conjgen

#ifndef CHOWBOUND_TESTS_TEST_UTIL_HPP
#define CHOWBOUND_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <string>

#include "chowbound/exactnum.hpp"
#include "chowbound/multipoly.hpp"

namespace chowbound::test {

inline double to_double(const HighPrecReal& x) { return x.convert_to<double>(); }

/// |x - expected| <= tol, reported with both values on failure.
inline bool close(const HighPrecReal& x, double expected, double tol) {
  return std::fabs(to_double(x) - expected) <= tol;
}

inline bool rel_close(const HighPrecReal& x, double expected, double rel) {
  return std::fabs(to_double(x) - expected) <= rel * std::fabs(expected);
}

inline Monomial mono(std::initializer_list<int> exps) {
  Monomial m{};
  int i = 0;
  for (int e : exps) m[i++] = static_cast<std::uint16_t>(e);
  return m;
}

}  // namespace chowbound::test

#endif  // CHOWBOUND_TESTS_TEST_UTIL_HPP

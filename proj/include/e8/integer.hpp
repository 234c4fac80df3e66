#ifndef E8_INTEGER_HPP
#define E8_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace e8 {

/// Arbitrary precision integer used for every multiplicity, exponent and
/// coefficient in the library.
using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline std::string to_string(const Integer& a) { return a.str(); }

/// Exact test a/b == c/d for positive denominators.
inline bool same_ratio(const Integer& a, const Integer& b, const Integer& c,
                       const Integer& d) {
  return a * d == c * b;
}

/// Sign of a/b - c/d for positive denominators.
inline int compare_ratio(const Integer& a, const Integer& b, const Integer& c,
                         const Integer& d) {
  const Integer lhs = a * d;
  const Integer rhs = c * b;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace e8

#endif  // E8_INTEGER_HPP

// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#ifndef MONOSG_NAT_HPP_
#define MONOSG_NAT_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace monosg {

/// Arbitrary-precision integer. Exponents grow multiplicatively under
/// repeated absorption, so machine integers are not enough. Naturalness
/// (>= 0 or >= 1) is enforced at type boundaries, not by the integer type.
using Nat = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input could not be parsed; message carries file/line/column.
struct ParseError : Error {
  using Error::Error;
};

/// Raw relations do not determine a table (insufficient) or contradict one
/// (inconsistent).
struct CompileError : Error {
  using Error::Error;
};

/// A table lookup failed (missing pair, uncovered exponent).
struct EvalError : Error {
  using Error::Error;
};

/// Action sampling failed to stabilize or contradicted itself.
struct ProfileError : Error {
  using Error::Error;
};

inline Nat nat_gcd(const Nat& a, const Nat& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Nat nat_lcm(const Nat& a, const Nat& b) {
  return boost::multiprecision::lcm(a, b);
}

/// Least nonnegative representative of a mod m (m >= 1); a may be negative.
inline Nat mod_floor(const Nat& a, const Nat& m) {
  Nat r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Extended gcd: returns g = gcd(a, b) and sets x, y with a*x + b*y = g.
Nat ext_gcd(const Nat& a, const Nat& b, Nat& x, Nat& y);

/// Inverse of a mod m; requires gcd(a, m) == 1.
Nat mod_inverse(const Nat& a, const Nat& m);

/// Checked narrowing for container sizes and loop bounds.
std::size_t to_size(const Nat& n);

/// Parses a decimal natural; throws ParseError on anything else.
Nat parse_nat(const std::string& text);

std::string nat_str(const Nat& n);

}  // namespace monosg

#endif  // MONOSG_NAT_HPP_

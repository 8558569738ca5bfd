// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#include "monosg/nat.hpp"

#include <cctype>
#include <limits>

namespace monosg {

Nat ext_gcd(const Nat& a, const Nat& b, Nat& x, Nat& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  Nat x1, y1;
  Nat g = ext_gcd(b, Nat(a % b), x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

Nat mod_inverse(const Nat& a, const Nat& m) {
  Nat x, y;
  Nat g = ext_gcd(mod_floor(a, m), m, x, y);
  if (g != 1) throw Error("mod_inverse: arguments are not coprime");
  return mod_floor(x, m);
}

std::size_t to_size(const Nat& n) {
  if (n < 0 || n > std::numeric_limits<std::size_t>::max())
    throw Error("value out of range for a container index: " + nat_str(n));
  return n.convert_to<std::size_t>();
}

Nat parse_nat(const std::string& text) {
  if (text.empty()) throw ParseError("expected a number, got nothing");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected a decimal number, got '" + text + "'");
  }
  return Nat(text);
}

std::string nat_str(const Nat& n) { return n.str(); }

}  // namespace monosg

// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.
//
// Brute-force engine: independent of the closed-form algorithms, used to
// derive expected values and to certify tables at small scale.

#ifndef MONOSG_ORACLE_HPP_
#define MONOSG_ORACLE_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monosg/presentation.hpp"

namespace monosg {

/// Normal form by leftmost rewriting over an explicit relation list: the
/// leading factor a^k b is replaced by the relation's right side until one
/// run remains. Throws EvalError ("bound exceeded") when a needed relation
/// is not in the list.
NormalForm rewrite_normalize(const RawPresentation& raw, const Word& w);

/// First triple (x, y, z) of normal forms with exponents <= bound where
/// (x y) z differs from x (y z), scanning letters in alphabet order and
/// exponents ascending; absent if none.
std::optional<std::array<NormalForm, 3>> check_associativity(
    const ActionTable& table, const Nat& bound);

/// Confirms the table never equates two distinct normal forms. The
/// representation maps every product to a single normal form, so this is a
/// structural guarantee; the scan asserts it over exponents <= bound.
std::optional<std::string> check_disjointness(const ActionTable& table,
                                              const Nat& bound);

/// Every product of at most `depth` generators whose exponent stays within
/// `exponent_cap`, mapped to the least number of factors reaching it.
std::map<NormalForm, Nat> bounded_closure(const ActionTable& table,
                                          const std::vector<NormalForm>& gens,
                                          const Nat& depth,
                                          const Nat& exponent_cap);

/// Breadth-first search for x among products of at most `depth` generators,
/// pruning exponents above exponent(x) + max rule step * depth.
bool brute_membership(const ActionTable& table,
                      const std::vector<NormalForm>& gens,
                      const NormalForm& x, const Nat& depth);

/// Largest step of any residue rule in the table (0 if there are none).
Nat max_rule_step(const ActionTable& table);

}  // namespace monosg

#endif  // MONOSG_ORACLE_HPP_

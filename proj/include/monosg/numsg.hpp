// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.
//
// Finitely generated subsemigroups of (N, +), described exactly by a triple
// [d, N, F]: the gcd d of the set, the least threshold N such that every
// multiple of d >= N belongs, and the finite sporadic part F below N.

#ifndef MONOSG_NUMSG_HPP_
#define MONOSG_NUMSG_HPP_

#include <set>
#include <string>
#include <utility>

#include "monosg/core.hpp"

namespace monosg {

struct Triple {
  Nat d;
  Nat conductor;
  std::set<Nat> sporadic;

  Triple(Nat d_, Nat conductor_, std::set<Nat> sporadic_);

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// gcd of a nonempty set of positive naturals.
Nat gcd_of(const std::set<Nat>& values);

/// 2 * d * (product of gens): a proven upper bound for the conductor of the
/// subsemigroup generated by gens.
Nat paper_conductor_bound(const std::set<Nat>& gens);

/// Exact triple of the subsemigroup of (N, +) generated by gens (nonempty
/// sums). Conductor found by a representability sieve; the sieve stops as
/// soon as min(gens)/d consecutive representable values certify the tail.
Triple triple_from_generators(const std::set<Nat>& gens);

/// n >= 1 belongs iff it is sporadic or a multiple of d at least the
/// conductor.
bool triple_contains(const Triple& t, const Nat& n);

/// Enlarges the subsemigroup by a new element n not currently contained.
/// Returns the recomputed triple and the enlarged generator set. The measure
/// (d, missing_count) strictly lexicographically decreases.
std::pair<Triple, std::set<Nat>> triple_add_element(const Triple& t,
                                                    const std::set<Nat>& gens,
                                                    const Nat& n);

/// Same set as an EventuallyPeriodicSet: exceptions F plus one progression
/// of difference d starting at the conductor.
EventuallyPeriodicSet triple_to_eps(const Triple& t);

/// Multiples of d below the conductor that are not in the set. Second
/// component of the saturation termination measure.
Nat missing_count(const Triple& t);

/// "[d=1, N=8, F={3,5,6}]"
std::string triple_str(const Triple& t);

}  // namespace monosg

#endif  // MONOSG_NUMSG_HPP_

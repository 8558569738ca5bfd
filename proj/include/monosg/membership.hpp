// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.
//
// Subsemigroup membership by saturation: per-letter triples are enlarged
// with witnesses of closure violations until the union is closed under
// right multiplication by the generators.

#ifndef MONOSG_MEMBERSHIP_HPP_
#define MONOSG_MEMBERSHIP_HPP_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monosg/numsg.hpp"
#include "monosg/presentation.hpp"
#include "monosg/wordproblem.hpp"

namespace monosg {

/// a^{k1 + t*q} x = target^{e1 + t*s} for all t >= 0: the minimal
/// progression of one target letter under right multiplication by x.
struct ProfileAp {
  Letter target;
  Nat k1;
  Nat e1;
  Nat q;
  Nat s;

  bool covers(const Nat& k) const { return k >= k1 && (k - k1) % q == 0; }
  Nat exponent_at(const Nat& k) const { return e1 + s * ((k - k1) / q); }
};

/// Total description of k |-> normalize(a^k x): sampled exceptions up to a
/// cutoff, then one progression per target letter.
struct ActionProfile {
  Letter source;
  NormalForm factor;
  Nat cutoff = 0;                        // largest k not on any progression
  std::map<Nat, NormalForm> exceptions;  // all sampled k <= cutoff
  std::vector<ProfileAp> aps;            // first-hit order
  Nat samples = 0;                       // how far sampling ran

  NormalForm predict(const Nat& k) const;
};

/// Sampling window: valid tables stabilize well within this many samples.
Nat default_profile_window(const ActionTable& table);

/// Samples normalize(a^k x) for k = 1, 2, ... and extrapolates: each target
/// letter's first two hits pin its progression; sampling stops once a
/// trailing stretch of length lcm(differences) is fully explained. Every
/// sample is checked against the extrapolation. Throws ProfileError on a
/// contradiction or when `window` samples pass without stabilizing (both
/// signal an invalid table).
ActionProfile action_profile(const ActionTable& table, const Letter& a,
                             const NormalForm& x, const Nat& window);

/// The exponent sets { e : a^k x = j^e, k in domain } per target letter j:
/// residue slices of the domain pushed through each progression's affine
/// map, plus exception images.
std::map<Letter, EventuallyPeriodicSet> image_of_set(
    const ActionProfile& profile, const EventuallyPeriodicSet& domain);

/// One per-letter component U_i: the generator exponents collected so far
/// and their exact triple.
struct SaturationEntry {
  std::set<Nat> gens;
  Triple triple;
};

struct SaturationState {
  std::vector<NormalForm> generators;  // A_T in input order
  std::map<Letter, SaturationEntry> copies;
};

struct Violation {
  Letter source;
  NormalForm generator;
  Letter target;
  Nat witness;
};

using ProfileCache = std::map<std::pair<Letter, NormalForm>, ActionProfile>;

/// First closure violation, scanning generators in input order, source
/// letters in alphabet order, target letters in alphabet order, and taking
/// the minimal witness; absent when U is closed under right multiplication
/// by every generator. Profiles are memoized in `cache` when given;
/// window 0 means default_profile_window(table).
std::optional<Violation> check_closure(const SaturationState& state,
                                       const ActionTable& table,
                                       ProfileCache* cache = nullptr,
                                       const Nat& window = 0);

/// One saturation addition: the violation that triggered it and the
/// termination measure (d, missing count) of the modified letter around it.
/// `created` marks a previously untouched letter gaining its first triple.
struct SaturationStep {
  Violation violation;
  bool created = false;
  Nat d_before;
  Nat missing_before;
  Nat d_after;
  Nat missing_after;
};

struct SaturationResult {
  SaturationState state;
  std::vector<SaturationStep> steps;
};

/// Runs check_closure / add-witness to a fixed point. Terminates: each
/// addition strictly decreases (d, missing count) at the modified letter,
/// and new letters appear at most once each. window 0 means
/// default_profile_window(table).
SaturationResult saturate(const ActionTable& table,
                          const std::vector<NormalForm>& generators,
                          const Nat& window = 0);

/// Decides x in <A_T> from a saturated state.
bool is_member(const SaturationState& state, const NormalForm& x);

/// saturate + is_member.
bool membership(const ActionTable& table,
                const std::vector<NormalForm>& generators,
                const NormalForm& x);

}  // namespace monosg

#endif  // MONOSG_MEMBERSHIP_HPP_

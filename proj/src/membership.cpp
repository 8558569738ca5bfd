// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#include "monosg/membership.hpp"

#include <algorithm>

namespace monosg {

namespace {

// Saturation provably terminates; the cap turns a latent defect into an
// error instead of an unbounded loop.
constexpr std::size_t kSaturationLimit = 100'000;

std::string profile_loc(const Letter& a, const NormalForm& x) {
  return "(" + a.id + ", " + x.str() + ")";
}

}  // namespace

NormalForm ActionProfile::predict(const Nat& k) const {
  if (k < 1) throw Error("predict: exponent must be >= 1");
  if (k <= cutoff) {
    auto it = exceptions.find(k);
    if (it == exceptions.end())
      throw ProfileError("profile " + profile_loc(source, factor) +
                         " has no sample for k=" + nat_str(k));
    return it->second;
  }
  const ProfileAp* covering = nullptr;
  for (const ProfileAp& ap : aps) {
    if (!ap.covers(k)) continue;
    if (covering)
      throw ProfileError("profile " + profile_loc(source, factor) +
                         " is ambiguous at k=" + nat_str(k));
    covering = &ap;
  }
  if (!covering)
    throw ProfileError("profile " + profile_loc(source, factor) +
                       " does not cover k=" + nat_str(k));
  return NormalForm(covering->target, covering->exponent_at(k));
}

Nat default_profile_window(const ActionTable& table) {
  return 4 * (table.max_cutoff() + table.lcm_periods());
}

ActionProfile action_profile(const ActionTable& table, const Letter& a,
                             const NormalForm& x, const Nat& window) {
  if (window < 2) throw Error("action_profile: window must be >= 2");

  ActionProfile profile{a, x, 0, {}, {}, 0};
  std::vector<NormalForm> samples;  // index k-1
  std::vector<bool> explained;      // index k-1
  std::map<Letter, Nat> anchors;    // letters hit exactly once: k of the hit

  for (Nat k = 1; k <= window; ++k) {
    NormalForm nf = multiply(table, NormalForm(a, k), x);
    samples.push_back(nf);
    explained.push_back(false);

    auto hit = anchors.find(nf.letter);
    if (hit == anchors.end()) {
      bool has_ap = std::any_of(
          profile.aps.begin(), profile.aps.end(),
          [&](const ProfileAp& ap) { return ap.target == nf.letter; });
      if (!has_ap) anchors.emplace(nf.letter, k);
    } else {
      const Nat& k1 = hit->second;
      const NormalForm& first = samples[to_size(k1) - 1];
      if (nf.exponent < first.exponent)
        throw ProfileError("profile " + profile_loc(a, x) +
                           ": target exponent decreases from k=" +
                           nat_str(k1) + " to k=" + nat_str(k) +
                           "; table is invalid");
      profile.aps.push_back(
          {nf.letter, k1, first.exponent, k - k1, nf.exponent - first.exponent});
      explained[to_size(k1) - 1] = true;
      anchors.erase(hit);
    }

    for (const ProfileAp& ap : profile.aps) {
      if (!ap.covers(k)) continue;
      if (ap.target != nf.letter || ap.exponent_at(k) != nf.exponent)
        throw ProfileError(
            "profile " + profile_loc(a, x) + ": sample " + nf.str() +
            " at k=" + nat_str(k) + " contradicts the progression forcing " +
            NormalForm(ap.target, ap.exponent_at(k)).str() +
            "; table is invalid");
      explained.back() = true;
    }

    if (!profile.aps.empty()) {
      Nat stretch = 1;
      for (const ProfileAp& ap : profile.aps) stretch = nat_lcm(stretch, ap.q);
      if (k >= stretch) {
        std::size_t len = to_size(stretch);
        bool stable = true;
        for (std::size_t i = samples.size() - len; i < samples.size(); ++i) {
          if (!explained[i]) {
            stable = false;
            break;
          }
        }
        if (stable) {
          profile.samples = k;
          for (std::size_t i = samples.size(); i-- > 0;) {
            if (!explained[i]) {
              profile.cutoff = Nat(i) + 1;
              break;
            }
          }
          for (Nat e = 1; e <= profile.cutoff; ++e)
            profile.exceptions.emplace(e, samples[to_size(e) - 1]);
          return profile;
        }
      }
    }
  }

  throw ProfileError("profile " + profile_loc(a, x) + ": window of " +
                     nat_str(window) +
                     " samples exhausted without stabilizing; table is "
                     "invalid or the window is too small");
}

std::map<Letter, EventuallyPeriodicSet> image_of_set(
    const ActionProfile& profile, const EventuallyPeriodicSet& domain) {
  std::map<Letter, std::vector<Nat>> exceptions;
  std::map<Letter, std::vector<ArithmeticProgression>> progressions;

  for (const ProfileAp& ap : profile.aps) {
    EventuallyPeriodicSet slice = restrict_to_at_least(
        restrict_residue(domain, ap.q, mod_floor(ap.k1, ap.q)), ap.k1);
    for (const Nat& k : slice.exceptions())
      exceptions[ap.target].push_back(ap.exponent_at(k));
    for (const ArithmeticProgression& pr : slice.progressions())
      progressions[ap.target].emplace_back(ap.exponent_at(pr.start),
                                           ap.s * (pr.step / ap.q));
  }
  for (const auto& [k, nf] : profile.exceptions) {
    if (domain.contains(k)) exceptions[nf.letter].push_back(nf.exponent);
  }

  std::map<Letter, EventuallyPeriodicSet> images;
  for (auto& [letter, excs] : exceptions) {
    auto prs = progressions.find(letter);
    images.emplace(letter, EventuallyPeriodicSet::of(
                               std::move(excs),
                               prs == progressions.end()
                                   ? std::vector<ArithmeticProgression>{}
                                   : std::move(prs->second)));
  }
  for (auto& [letter, prs] : progressions) {
    if (images.count(letter) == 0)
      images.emplace(letter,
                     EventuallyPeriodicSet::of({}, std::move(prs)));
  }
  return images;
}

std::optional<Violation> check_closure(const SaturationState& state,
                                       const ActionTable& table,
                                       ProfileCache* cache,
                                       const Nat& window_arg) {
  ProfileCache local;
  if (cache == nullptr) cache = &local;
  const Nat window =
      window_arg == 0 ? default_profile_window(table) : window_arg;

  for (const NormalForm& x : state.generators) {
    for (const Letter& i : table.alphabet().letters()) {
      auto entry = state.copies.find(i);
      if (entry == state.copies.end()) continue;

      auto key = std::make_pair(i, x);
      auto cached = cache->find(key);
      if (cached == cache->end()) {
        cached = cache->emplace(key, action_profile(table, i, x, window)).first;
      }
      auto images = image_of_set(cached->second, triple_to_eps(entry->second.triple));

      for (const Letter& j : table.alphabet().letters()) {
        auto img = images.find(j);
        if (img == images.end() || img->second.empty()) continue;
        auto target = state.copies.find(j);
        std::optional<Nat> witness =
            target == state.copies.end()
                ? img->second.min_element()
                : min_difference(img->second,
                                 triple_to_eps(target->second.triple));
        if (witness) return Violation{i, x, j, *witness};
      }
    }
  }
  return std::nullopt;
}

SaturationResult saturate(const ActionTable& table,
                          const std::vector<NormalForm>& generators,
                          const Nat& window) {
  if (generators.empty())
    throw Error("saturate: at least one generator required");

  SaturationState state;
  state.generators = generators;
  for (const NormalForm& g : generators) {
    auto it = state.copies.find(g.letter);
    if (it == state.copies.end()) {
      state.copies.emplace(
          g.letter,
          SaturationEntry{{g.exponent}, triple_from_generators({g.exponent})});
    } else if (it->second.gens.insert(g.exponent).second) {
      it->second.triple = triple_from_generators(it->second.gens);
    }
  }

  std::vector<SaturationStep> steps;
  ProfileCache cache;
  for (std::size_t round = 0;; ++round) {
    if (round > kSaturationLimit)
      throw Error("saturate: round limit exceeded; table is invalid");
    std::optional<Violation> v = check_closure(state, table, &cache, window);
    if (!v) break;

    auto it = state.copies.find(v->target);
    if (it == state.copies.end()) {
      Triple t = triple_from_generators({v->witness});
      steps.push_back({*v, true, 0, 0, t.d, missing_count(t)});
      state.copies.emplace(v->target,
                           SaturationEntry{{v->witness}, std::move(t)});
    } else {
      SaturationEntry& entry = it->second;
      Nat d_before = entry.triple.d;
      Nat missing_before = missing_count(entry.triple);
      auto [enlarged, gens] =
          triple_add_element(entry.triple, entry.gens, v->witness);
      steps.push_back({*v, false, std::move(d_before),
                       std::move(missing_before), enlarged.d,
                       missing_count(enlarged)});
      entry.gens = std::move(gens);
      entry.triple = std::move(enlarged);
    }
  }
  return {std::move(state), std::move(steps)};
}

bool is_member(const SaturationState& state, const NormalForm& x) {
  auto it = state.copies.find(x.letter);
  if (it == state.copies.end()) return false;
  return triple_contains(it->second.triple, x.exponent);
}

bool membership(const ActionTable& table,
                const std::vector<NormalForm>& generators,
                const NormalForm& x) {
  return is_member(saturate(table, generators).state, x);
}

}  // namespace monosg

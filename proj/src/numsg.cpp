// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#include "monosg/numsg.hpp"

#include <sstream>
#include <vector>

namespace monosg {

namespace {

// The sieve array grows to the conductor of the gcd-scaled generator set.
// Past this many entries the instance is out of scope for an exact answer.
constexpr std::size_t kSieveLimit = 20'000'000;

}  // namespace

Triple::Triple(Nat d_, Nat conductor_, std::set<Nat> sporadic_)
    : d(std::move(d_)),
      conductor(std::move(conductor_)),
      sporadic(std::move(sporadic_)) {
  if (d < 1) throw Error("triple: d must be >= 1");
  if (conductor < 1 || conductor % d != 0)
    throw Error("triple: conductor must be a positive multiple of d");
  for (const Nat& f : sporadic) {
    if (f < 1 || f >= conductor || f % d != 0)
      throw Error("triple: sporadic value " + nat_str(f) +
                  " must be a multiple of d below the conductor");
  }
}

Nat gcd_of(const std::set<Nat>& values) {
  if (values.empty()) throw Error("gcd_of: empty input");
  Nat g = 0;
  for (const Nat& v : values) {
    if (v < 1) throw Error("gcd_of: values must be >= 1");
    g = nat_gcd(g, v);
  }
  return g;
}

Nat paper_conductor_bound(const std::set<Nat>& gens) {
  Nat bound = 2 * gcd_of(gens);
  for (const Nat& g : gens) bound *= g;
  return bound;
}

Triple triple_from_generators(const std::set<Nat>& gens) {
  Nat d = gcd_of(gens);
  std::vector<std::size_t> scaled;
  for (const Nat& g : gens) scaled.push_back(to_size(g / d));
  std::size_t min_gen = scaled.front();

  // reachable[n] = n is a sum of scaled generators (reachable[0] = empty
  // sum, the recursion base; 0 itself is not an element). Once min_gen
  // consecutive values are reachable, everything beyond is too: the next
  // value is min_gen plus a value inside the run.
  std::vector<bool> reachable = {true};
  std::size_t run = 0;
  std::size_t conductor_scaled = 0;
  for (std::size_t n = 1;; ++n) {
    if (n > kSieveLimit)
      throw Error("triple_from_generators: conductor certificate exceeds " +
                  std::to_string(kSieveLimit) + " entries");
    bool hit = false;
    for (std::size_t g : scaled) {
      if (g <= n && reachable[n - g]) {
        hit = true;
        break;
      }
    }
    reachable.push_back(hit);
    run = hit ? run + 1 : 0;
    if (run == min_gen) {
      conductor_scaled = n - min_gen + 1;
      break;
    }
  }

  std::set<Nat> sporadic;
  for (std::size_t n = 1; n < conductor_scaled; ++n) {
    if (reachable[n]) sporadic.insert(Nat(n) * d);
  }
  return Triple(d, Nat(conductor_scaled) * d, std::move(sporadic));
}

bool triple_contains(const Triple& t, const Nat& n) {
  if (n < 1) throw Error("triple_contains: n must be >= 1");
  if (t.sporadic.count(n) != 0) return true;
  return n >= t.conductor && n % t.d == 0;
}

std::pair<Triple, std::set<Nat>> triple_add_element(const Triple& t,
                                                    const std::set<Nat>& gens,
                                                    const Nat& n) {
  if (triple_contains(t, n))
    throw Error("triple_add_element: " + nat_str(n) + " already present");
  std::set<Nat> enlarged = gens;
  enlarged.insert(n);
  return {triple_from_generators(enlarged), std::move(enlarged)};
}

EventuallyPeriodicSet triple_to_eps(const Triple& t) {
  Nat start = t.conductor + mod_floor(-t.conductor, t.d);
  std::vector<Nat> exceptions(t.sporadic.begin(), t.sporadic.end());
  return EventuallyPeriodicSet::of(std::move(exceptions),
                                   {ArithmeticProgression(start, t.d)});
}

Nat missing_count(const Triple& t) {
  return t.conductor / t.d - 1 - Nat(t.sporadic.size());
}

std::string triple_str(const Triple& t) {
  std::ostringstream os;
  os << "[d=" << t.d << ", N=" << t.conductor << ", F={";
  bool first = true;
  for (const Nat& f : t.sporadic) {
    if (!first) os << ',';
    first = false;
    os << f;
  }
  os << "}]";
  return os.str();
}

}  // namespace monosg

// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.
//
// Domain types shared by all modules: letters, normal forms, words, and the
// algebra of eventually periodic subsets of the positive naturals.

#ifndef MONOSG_CORE_HPP_
#define MONOSG_CORE_HPP_

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monosg/nat.hpp"

namespace monosg {

/// One generator symbol. Each letter names one copy of the free monogenic
/// semigroup inside the union.
struct Letter {
  std::string id;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

std::ostream& operator<<(std::ostream& os, const Letter& l);

/// Finite, duplicate-free set of letters. Order is declaration order and is
/// the tie-break order used everywhere a deterministic scan is promised.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool contains(const Letter& l) const;
  std::optional<Letter> find(std::string_view id) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Canonical element a^k: one letter and an exponent >= 1. The copies have no
/// identity, so exponent 0 is rejected.
struct NormalForm {
  Letter letter;
  Nat exponent;

  NormalForm(Letter l, Nat e);

  std::string str() const;  // "a^4"

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend std::strong_ordering operator<=>(const NormalForm&,
                                          const NormalForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const NormalForm& nf);

/// A word over the alphabet as a run-length sequence x1^i1 x2^i2 ... xm^im.
/// Construction merges adjacent runs with the same letter, so a canonical
/// word has distinct letters in neighbouring runs.
class Word {
 public:
  using Run = std::pair<Letter, Nat>;

  explicit Word(std::vector<Run> runs);
  explicit Word(const NormalForm& nf);

  const std::vector<Run>& runs() const { return runs_; }
  /// Sum of all run exponents.
  Nat weight() const;
  Word concat(const Word& other) const;
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Run> runs_;
};

/// {start, start+step, start+2*step, ...}; step 0 denotes the singleton
/// {start}, so constant image maps need no special case.
struct ArithmeticProgression {
  Nat start;  // >= 1
  Nat step;   // >= 0

  ArithmeticProgression(Nat start_, Nat step_);

  bool contains(const Nat& n) const;
  /// True iff every element of *this lies in other.
  bool subset_of(const ArithmeticProgression& other) const;

  friend bool operator==(const ArithmeticProgression&,
                         const ArithmeticProgression&) = default;
  friend std::strong_ordering operator<=>(
      const ArithmeticProgression&, const ArithmeticProgression&) = default;
};

/// A finite exception set plus finitely many arithmetic progressions.
/// Normalized on construction: singleton progressions become exceptions, no
/// exception lies in a progression, no progression is contained in another.
class EventuallyPeriodicSet {
 public:
  EventuallyPeriodicSet() = default;  // the empty set

  static EventuallyPeriodicSet of(std::vector<Nat> exceptions,
                                  std::vector<ArithmeticProgression> aps);
  static EventuallyPeriodicSet singletons(std::vector<Nat> values);

  const std::set<Nat>& exceptions() const { return exceptions_; }
  const std::vector<ArithmeticProgression>& progressions() const {
    return progressions_;
  }

  bool empty() const { return exceptions_.empty() && progressions_.empty(); }
  bool contains(const Nat& n) const;
  std::optional<Nat> min_element() const;
  /// All members <= bound, ascending (test and oracle support).
  std::vector<Nat> elements_up_to(const Nat& bound) const;

  std::string str() const;

  /// Structural equality of normalized representations. Distinct
  /// representations can denote the same set; use min_difference for
  /// semantic comparisons.
  friend bool operator==(const EventuallyPeriodicSet&,
                         const EventuallyPeriodicSet&) = default;

 private:
  std::set<Nat> exceptions_;
  std::vector<ArithmeticProgression> progressions_;
};

/// {offset + scale * n : n in set}. offset may be negative as long as every
/// image value stays >= 1; otherwise throws Error.
EventuallyPeriodicSet affine_image(const EventuallyPeriodicSet& set,
                                   const Nat& offset, const Nat& scale);

/// {n in set : n = residue (mod modulus)}.
EventuallyPeriodicSet restrict_residue(const EventuallyPeriodicSet& set,
                                       const Nat& modulus, const Nat& residue);

/// {n in set : n >= lo}.
EventuallyPeriodicSet restrict_to_at_least(const EventuallyPeriodicSet& set,
                                           const Nat& lo);

/// Minimum element of a \ b, or nullopt when a is a subset of b. Exact: scans
/// to max(starts, exceptions) + lcm(steps), beyond which both sets are unions
/// of full residue classes of the joint modulus.
std::optional<Nat> min_difference(const EventuallyPeriodicSet& a,
                                  const EventuallyPeriodicSet& b);

inline bool subset_of(const EventuallyPeriodicSet& a,
                      const EventuallyPeriodicSet& b) {
  return !min_difference(a, b).has_value();
}

}  // namespace monosg

#endif  // MONOSG_CORE_HPP_

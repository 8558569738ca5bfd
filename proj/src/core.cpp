// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#include "monosg/core.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace monosg {

namespace {

// Exact containment decisions scan up to max(starts, exceptions) + lcm of all
// steps. The guard keeps a malformed input from turning that scan into a
// runaway loop.
const Nat kScanLimit = 20'000'000;

}  // namespace

std::ostream& operator<<(std::ostream& os, const Letter& l) {
  return os << l.id;
}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error("alphabet must be nonempty");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].id.empty()) throw Error("letter with empty name");
    for (std::size_t j = i + 1; j < letters_.size(); ++j) {
      if (letters_[i] == letters_[j])
        throw Error("duplicate letter '" + letters_[i].id + "'");
    }
  }
}

bool Alphabet::contains(const Letter& l) const {
  return std::find(letters_.begin(), letters_.end(), l) != letters_.end();
}

std::optional<Letter> Alphabet::find(std::string_view id) const {
  for (const Letter& l : letters_) {
    if (l.id == id) return l;
  }
  return std::nullopt;
}

NormalForm::NormalForm(Letter l, Nat e)
    : letter(std::move(l)), exponent(std::move(e)) {
  if (exponent < 1)
    throw Error("normal form exponent must be >= 1, got " +
                nat_str(exponent));
}

std::string NormalForm::str() const {
  return letter.id + "^" + nat_str(exponent);
}

std::ostream& operator<<(std::ostream& os, const NormalForm& nf) {
  return os << nf.str();
}

Word::Word(std::vector<Run> runs) {
  if (runs.empty()) throw Error("word must be nonempty");
  for (auto& [letter, exp] : runs) {
    if (exp < 1)
      throw Error("word run exponent must be >= 1, got " + nat_str(exp));
    if (!runs_.empty() && runs_.back().first == letter) {
      runs_.back().second += exp;
    } else {
      runs_.emplace_back(std::move(letter), std::move(exp));
    }
  }
}

Word::Word(const NormalForm& nf) : runs_{{nf.letter, nf.exponent}} {}

Nat Word::weight() const {
  Nat total = 0;
  for (const auto& [letter, exp] : runs_) total += exp;
  return total;
}

Word Word::concat(const Word& other) const {
  std::vector<Run> runs = runs_;
  runs.insert(runs.end(), other.runs_.begin(), other.runs_.end());
  return Word(std::move(runs));
}

std::string Word::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [letter, exp] : runs_) {
    if (!first) os << ' ';
    first = false;
    os << letter.id;
    if (exp != 1) os << '^' << exp;
  }
  return os.str();
}

ArithmeticProgression::ArithmeticProgression(Nat start_, Nat step_)
    : start(std::move(start_)), step(std::move(step_)) {
  if (start < 1)
    throw Error("progression start must be >= 1, got " + nat_str(start));
  if (step < 0)
    throw Error("progression step must be >= 0, got " + nat_str(step));
}

bool ArithmeticProgression::contains(const Nat& n) const {
  if (n < start) return false;
  if (step == 0) return n == start;
  return (n - start) % step == 0;
}

bool ArithmeticProgression::subset_of(const ArithmeticProgression& o) const {
  if (step == 0) return o.contains(start);
  // Infinite progression: needs o infinite, compatible modulus and phase.
  if (o.step == 0) return false;
  return start >= o.start && step % o.step == 0 &&
         (start - o.start) % o.step == 0;
}

EventuallyPeriodicSet EventuallyPeriodicSet::of(
    std::vector<Nat> exceptions, std::vector<ArithmeticProgression> aps) {
  EventuallyPeriodicSet result;

  std::vector<ArithmeticProgression> infinite;
  for (auto& ap : aps) {
    if (ap.step == 0) {
      exceptions.push_back(ap.start);
    } else {
      infinite.push_back(std::move(ap));
    }
  }

  // Drop progressions contained in another; ties resolved by keeping the
  // lexicographically first of an equal pair.
  std::sort(infinite.begin(), infinite.end());
  infinite.erase(std::unique(infinite.begin(), infinite.end()),
                 infinite.end());
  for (std::size_t i = 0; i < infinite.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < infinite.size() && !redundant; ++j) {
      if (i != j && infinite[i].subset_of(infinite[j]) &&
          !(infinite[j].subset_of(infinite[i]) && j > i)) {
        redundant = true;
      }
    }
    if (!redundant) result.progressions_.push_back(infinite[i]);
  }

  for (auto& e : exceptions) {
    if (e < 1) throw Error("set element must be >= 1, got " + nat_str(e));
    bool covered = false;
    for (const auto& ap : result.progressions_) {
      if (ap.contains(e)) {
        covered = true;
        break;
      }
    }
    if (!covered) result.exceptions_.insert(std::move(e));
  }
  return result;
}

EventuallyPeriodicSet EventuallyPeriodicSet::singletons(
    std::vector<Nat> values) {
  return of(std::move(values), {});
}

bool EventuallyPeriodicSet::contains(const Nat& n) const {
  if (exceptions_.count(n) != 0) return true;
  for (const auto& ap : progressions_) {
    if (ap.contains(n)) return true;
  }
  return false;
}

std::optional<Nat> EventuallyPeriodicSet::min_element() const {
  std::optional<Nat> best;
  if (!exceptions_.empty()) best = *exceptions_.begin();
  for (const auto& ap : progressions_) {
    if (!best || ap.start < *best) best = ap.start;
  }
  return best;
}

std::vector<Nat> EventuallyPeriodicSet::elements_up_to(
    const Nat& bound) const {
  if (bound > kScanLimit) throw Error("enumeration bound too large");
  std::vector<Nat> out;
  for (Nat n = 1; n <= bound; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

std::string EventuallyPeriodicSet::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& e : exceptions_) {
    if (!first) os << ',';
    first = false;
    os << e;
  }
  os << '}';
  for (const auto& ap : progressions_) {
    os << " u AP(" << ap.start << ',' << ap.step << ')';
  }
  return os.str();
}

EventuallyPeriodicSet affine_image(const EventuallyPeriodicSet& set,
                                   const Nat& offset, const Nat& scale) {
  if (scale < 0) throw Error("affine_image: scale must be >= 0");
  auto min = set.min_element();
  if (!min) return {};
  if (offset + scale * *min < 1)
    throw Error("affine_image: image would contain a value < 1");

  std::vector<Nat> exceptions;
  std::vector<ArithmeticProgression> aps;
  for (const auto& e : set.exceptions()) exceptions.push_back(offset + scale * e);
  for (const auto& ap : set.progressions())
    aps.emplace_back(offset + scale * ap.start, scale * ap.step);
  return EventuallyPeriodicSet::of(std::move(exceptions), std::move(aps));
}

EventuallyPeriodicSet restrict_residue(const EventuallyPeriodicSet& set,
                                       const Nat& modulus,
                                       const Nat& residue) {
  if (modulus < 1) throw Error("restrict_residue: modulus must be >= 1");
  if (residue < 0 || residue >= modulus)
    throw Error("restrict_residue: residue out of range");

  std::vector<Nat> exceptions;
  std::vector<ArithmeticProgression> aps;
  for (const auto& e : set.exceptions()) {
    if (e % modulus == residue) exceptions.push_back(e);
  }
  for (const auto& ap : set.progressions()) {
    // Solve n = ap.start + ap.step * t = residue (mod modulus) for t >= 0.
    Nat g = nat_gcd(ap.step, modulus);
    Nat diff = mod_floor(residue - ap.start, modulus);
    if (diff % g != 0) continue;  // incompatible congruences
    Nat m_red = modulus / g;
    Nat t0 = 0;
    if (m_red > 1) {
      Nat inv = mod_inverse(Nat(ap.step / g), m_red);
      t0 = mod_floor(Nat(diff / g) * inv, m_red);
    }
    Nat start = ap.start + ap.step * t0;
    aps.emplace_back(std::move(start), nat_lcm(ap.step, modulus));
  }
  return EventuallyPeriodicSet::of(std::move(exceptions), std::move(aps));
}

EventuallyPeriodicSet restrict_to_at_least(const EventuallyPeriodicSet& set,
                                           const Nat& lo) {
  std::vector<Nat> exceptions;
  std::vector<ArithmeticProgression> aps;
  for (const auto& e : set.exceptions()) {
    if (e >= lo) exceptions.push_back(e);
  }
  for (const auto& ap : set.progressions()) {
    if (ap.start >= lo) {
      aps.push_back(ap);
    } else {
      Nat skip = (lo - ap.start + ap.step - 1) / ap.step;
      aps.emplace_back(ap.start + skip * ap.step, ap.step);
    }
  }
  return EventuallyPeriodicSet::of(std::move(exceptions), std::move(aps));
}

std::optional<Nat> min_difference(const EventuallyPeriodicSet& a,
                                  const EventuallyPeriodicSet& b) {
  if (a.empty()) return std::nullopt;

  Nat max_fixed = 0;
  Nat joint_step = 1;
  auto account = [&](const EventuallyPeriodicSet& s) {
    for (const auto& e : s.exceptions()) max_fixed = std::max(max_fixed, e);
    for (const auto& ap : s.progressions()) {
      max_fixed = std::max(max_fixed, ap.start);
      if (ap.step > 0) joint_step = nat_lcm(joint_step, ap.step);
    }
  };
  account(a);
  account(b);

  // Beyond max_fixed both sets are unions of full residue classes mod
  // joint_step, so scanning one further period is a complete certificate.
  Nat bound = max_fixed + joint_step;
  if (bound > kScanLimit)
    throw Error("min_difference: certificate scan bound too large (" +
                nat_str(bound) + ")");
  for (Nat n = 1; n <= bound; ++n) {
    if (a.contains(n) && !b.contains(n)) return n;
  }
  return std::nullopt;
}

}  // namespace monosg

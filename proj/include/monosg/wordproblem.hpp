// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.
//
// The word problem: reduce words to normal forms a^k by absorbing one
// letter at a time through the action table, in closed form per absorption.

#ifndef MONOSG_WORDPROBLEM_HPP_
#define MONOSG_WORDPROBLEM_HPP_

#include <string>

#include "monosg/presentation.hpp"

namespace monosg {

/// The product a^s * b as a normal form, evaluated in closed form: an
/// exception lookup for s <= cutoff(a,b), otherwise the residue rule of
/// s mod D applied at offset f = (s - k0)/D. Never iterates over f.
NormalForm absorb(const ActionTable& table, const Letter& a, const Nat& s,
                  const Letter& b);

/// Normal form of a word: left fold over runs. A run of the current letter
/// is absorbed as one exponent addition; a run of another letter is absorbed
/// one occurrence at a time, switching to addition as soon as the running
/// normal form lands on the run's letter.
NormalForm normalize(const ActionTable& table, const Word& u);

/// Two words are equal in S iff their normal forms coincide.
bool equal(const ActionTable& table, const Word& u, const Word& v);

/// Normal form of x * y.
NormalForm multiply(const ActionTable& table, const NormalForm& x,
                    const NormalForm& y);

/// Word syntax: runs of `<letter>` or `<letter>^<natural>`, whitespace
/// optional between runs; letters match longest-first against the alphabet.
Word parse_word(const Alphabet& alphabet, const std::string& text);

/// A word of exactly one run.
NormalForm parse_normal_form(const Alphabet& alphabet, const std::string& text);

}  // namespace monosg

#endif  // MONOSG_WORDPROBLEM_HPP_

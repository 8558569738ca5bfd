// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.
//
// Presentation files, raw relation lists, and their compiled form: the
// action table. A table describes, for each ordered pair of distinct
// letters (a, b), the value of a^k b for every k >= 1 as finitely many
// exceptions followed by one affine rule per residue class of a period.

#ifndef MONOSG_PRESENTATION_HPP_
#define MONOSG_PRESENTATION_HPP_

#include <iosfwd>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "monosg/core.hpp"

namespace monosg {

/// One defining relation a^k b = c^m.
struct RawRelation {
  Letter a;
  Nat k;
  Letter b;
  Letter c;
  Nat m;

  friend bool operator==(const RawRelation&, const RawRelation&) = default;
};

struct RawPresentation {
  Alphabet alphabet;
  std::vector<RawRelation> relations;
};

/// a^{k0 + f*period} b = target^{e0 + f*step} for all f >= 0, where period
/// is the enclosing PairAction's period and k0 is in the residue class the
/// rule is keyed under.
struct ResidueRule {
  Letter target;
  Nat k0;
  Nat e0;
  Nat step;

  friend bool operator==(const ResidueRule&, const ResidueRule&) = default;
};

/// Action of right multiplication by b on powers of a: exception lookups for
/// k <= cutoff, then one rule per residue class of k mod period.
struct PairAction {
  Nat cutoff = 0;
  std::map<Nat, NormalForm> exceptions;  // keys 1..cutoff
  Nat period = 1;
  std::map<Nat, ResidueRule> rules;  // keyed by k0 mod period

  friend bool operator==(const PairAction&, const PairAction&) = default;
};

class ActionTable {
 public:
  using PairMap = std::map<std::pair<Letter, Letter>, PairAction>;

  ActionTable(Alphabet alphabet, PairMap pairs);

  const Alphabet& alphabet() const { return alphabet_; }
  const PairMap& pairs() const { return pairs_; }
  /// nullptr when the table has no entry for (a, b).
  const PairAction* find_pair(const Letter& a, const Letter& b) const;

  Nat max_cutoff() const;
  Nat lcm_periods() const;

 private:
  Alphabet alphabet_;
  PairMap pairs_;
};

struct Diagnostic {
  enum class Severity { error };

  Severity severity = Severity::error;
  std::string location;  // "(a,b) k=3" style
  std::string message;
};

using Diagnostics = std::vector<Diagnostic>;

using ParsedPresentation = std::variant<RawPresentation, ActionTable>;

/// Reads a presentation file: a `letters:` line followed by either raw
/// `rel:` lines or compiled `ap:`/`exc:` lines ('#' starts a comment).
/// Mixing the two kinds is an error.
ParsedPresentation parse_presentation(std::istream& in);

inline ParsedPresentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

/// Compiles raw relations into an ActionTable. For each pair, each target
/// letter's first two hits pin its minimal progression; the pair period is
/// the lcm of the progression differences; every further relation must match
/// the extrapolation. Throws CompileError ("insufficient relations" /
/// "inconsistent") when the relations do not determine a table.
ActionTable compile(const RawPresentation& raw);

struct ValidateOptions {
  /// Run the brute-force associativity check as part of validation.
  bool deep = false;
  /// Exponent bound for the deep check.
  Nat deep_bound = 6;
};

/// Semantic checks on a structurally well-formed table: coverage of every
/// exponent, one target letter per residue class, period consistency
/// (a^{k+D} b must equal a^D (a^k b)), optional deep associativity. Returns
/// one diagnostic per failure; empty means valid.
Diagnostics validate(const ActionTable& table, const ValidateOptions& options = {});

/// Compiled-form text of a table; parse_presentation round-trips it.
std::string to_text(const ActionTable& table);

/// Raw relations a^k b = table value, for all pairs and k = 1..max_k.
RawPresentation expand_to_raw(const ActionTable& table, const Nat& max_k);

/// The table denoted by a parsed file: compiled files as-is, raw files
/// through compile.
ActionTable to_table(const ParsedPresentation& parsed);

}  // namespace monosg

#endif  // MONOSG_PRESENTATION_HPP_

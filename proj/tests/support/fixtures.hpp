// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.
//
// Shared fixtures: the four presentations used across the test suites, their
// compiled tables, and three deliberately broken mutants of them.

#ifndef MONOSG_TESTS_SUPPORT_FIXTURES_HPP_
#define MONOSG_TESTS_SUPPORT_FIXTURES_HPP_

#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include "monosg/presentation.hpp"
#include "monosg/wordproblem.hpp"

namespace monosg::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(MONOSG_FIXTURE_DIR) + "/" + name;
}

inline ParsedPresentation load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw Error("fixture not found: " + name);
  return parse_presentation(in);
}

inline const RawPresentation& fixture_raw(const std::string& name) {
  static std::map<std::string, RawPresentation> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, std::get<RawPresentation>(load_fixture(name)))
             .first;
  return it->second;
}

inline const RawPresentation& s0_raw() { return fixture_raw("s0.sgp"); }
inline const RawPresentation& s1_raw() { return fixture_raw("s1.sgp"); }
inline const RawPresentation& s2_raw() { return fixture_raw("s2.sgp"); }
inline const RawPresentation& s3_raw() { return fixture_raw("s3.sgp"); }

inline const ActionTable& fixture_table(const std::string& name) {
  static std::map<std::string, ActionTable> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, compile(fixture_raw(name))).first;
  return it->second;
}

inline const ActionTable& s0() { return fixture_table("s0.sgp"); }
inline const ActionTable& s1() { return fixture_table("s1.sgp"); }
inline const ActionTable& s2() { return fixture_table("s2.sgp"); }
inline const ActionTable& s3() { return fixture_table("s3.sgp"); }

inline Letter L(const std::string& id) { return Letter{id}; }

inline NormalForm nf(const std::string& letter, Nat exponent) {
  return NormalForm(L(letter), std::move(exponent));
}

inline Word word(const ActionTable& table, const std::string& text) {
  return parse_word(table.alphabet(), text);
}

/// Copies `table` and rewrites the residue rule of `pair`/`residue` through
/// `edit`. The result is structurally well formed but no longer describes a
/// semigroup, which is exactly what the mutation tests need.
template <typename Edit>
ActionTable mutate_rule(const ActionTable& table,
                        std::pair<Letter, Letter> pair, const Nat& residue,
                        Edit edit) {
  ActionTable::PairMap pairs = table.pairs();
  edit(pairs.at(pair).rules.at(residue));
  return ActionTable(table.alphabet(), std::move(pairs));
}

/// S1 with the (a,b) progression climbing twice as fast.
inline ActionTable mutant_step() {
  return mutate_rule(s1(), {L("a"), L("b")}, 0,
                     [](ResidueRule& r) { r.step = 2; });
}

/// S1 with the (b,a) progression starting one too high.
inline ActionTable mutant_base() {
  return mutate_rule(s1(), {L("b"), L("a")}, 0,
                     [](ResidueRule& r) { r.e0 = 3; });
}

/// S3 with the (a,c) products claimed for the copy of a.
inline ActionTable mutant_target() {
  return mutate_rule(s3(), {L("a"), L("c")}, 0,
                     [](ResidueRule& r) { r.target = Letter{"a"}; });
}

}  // namespace monosg::testing

#endif  // MONOSG_TESTS_SUPPORT_FIXTURES_HPP_

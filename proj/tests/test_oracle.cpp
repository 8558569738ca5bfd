// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#include "monosg/oracle.hpp"

#include <doctest.h>

#include <vector>

#include "monosg/wordproblem.hpp"
#include "support/fixtures.hpp"

namespace monosg {
namespace {

using testing::L;
using testing::nf;
using testing::s0;
using testing::s1;
using testing::s2;
using testing::s3;
using testing::word;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("leftmost rewriting examples") {
  RawPresentation s1_10 = expand_to_raw(s1(), 10);
  CHECK(rewrite_normalize(s1_10, word(s1(), "abab")) == nf("a", 4));
  CHECK(rewrite_normalize(s1_10, word(s1(), "b^3")) == nf("b", 3));
  CHECK(rewrite_normalize(expand_to_raw(s2(), 10), word(s2(), "aba")) ==
        nf("a", 3));
}

TEST_CASE("rewriting beyond the expansion bound fails loudly") {
  RawPresentation tiny = expand_to_raw(s1(), 2);
  CHECK_THROWS_WITH_AS(rewrite_normalize(tiny, word(s1(), "a^3 b")),
                       doctest::Contains("bound exceeded"), EvalError);
}

TEST_CASE("rewriting uses only the listed relations") {
  // The list disagrees with S1 on purpose; the oracle must follow the list.
  auto parsed = parse_presentation("letters: a b\nrel: a 1 b -> b 7");
  const auto& raw = std::get<RawPresentation>(parsed);
  CHECK(rewrite_normalize(raw, word(s1(), "ab")) == nf("b", 7));
  CHECK(rewrite_normalize(raw, word(s1(), "a b^2")) == nf("b", 8));
}

TEST_CASE("associativity holds on fixtures") {
  CHECK_FALSE(check_associativity(s0(), 5).has_value());
  CHECK_FALSE(check_associativity(s1(), 5).has_value());
  CHECK_FALSE(check_associativity(s2(), 5).has_value());
  CHECK_FALSE(check_associativity(s3(), 4).has_value());
}

TEST_CASE("associativity fails on the mutants") {
  auto counter = check_associativity(testing::mutant_step(), 3);
  REQUIRE(counter.has_value());
  const auto& [x, y, z] = *counter;
  CHECK(multiply(testing::mutant_step(), multiply(testing::mutant_step(), x, y),
                 z) !=
        multiply(testing::mutant_step(), x,
                 multiply(testing::mutant_step(), y, z)));

  CHECK(check_associativity(testing::mutant_base(), 3).has_value());
  CHECK(check_associativity(testing::mutant_target(), 3).has_value());
}

TEST_CASE("disjointness is a representation-level guarantee") {
  CHECK_FALSE(check_disjointness(s1(), 5).has_value());
  CHECK_FALSE(check_disjointness(s2(), 5).has_value());
  CHECK_FALSE(check_disjointness(s3(), 5).has_value());
}

TEST_CASE("bounded closure records least factor counts") {
  auto closure = bounded_closure(s1(), {nf("a", 3), nf("b", 2)}, 3, 100);
  CHECK(closure.at(nf("a", 3)) == 1);
  CHECK(closure.at(nf("b", 2)) == 1);
  CHECK(closure.at(nf("a", 5)) == 2);   // b^2 a^3
  CHECK(closure.at(nf("a", 6)) == 2);   // a^3 a^3
  CHECK(closure.at(nf("b", 4)) == 2);
  CHECK(closure.at(nf("a", 7)) == 3);   // b^2 b^2 a^3
  CHECK(closure.count(nf("a", 4)) == 0);
}

TEST_CASE("brute membership examples") {
  std::vector<NormalForm> gens{nf("a", 3), nf("b", 2)};
  CHECK(brute_membership(s1(), gens, nf("a", 5), 3));
  CHECK_FALSE(brute_membership(s1(), gens, nf("a", 4), 8));
  CHECK(brute_membership(s0(), {nf("a", 1)}, nf("a", 7), 7));
  CHECK_FALSE(brute_membership(s0(), {nf("a", 1)}, nf("a", 8), 7));
}

TEST_CASE("max rule step") {
  CHECK(max_rule_step(s0()) == 0);
  CHECK(max_rule_step(s1()) == 1);
  CHECK(max_rule_step(testing::mutant_step()) == 2);
}

TEST_CASE("rewriting agrees with table evaluation on fixture words") {
  for (const ActionTable* table : {&s1(), &s2(), &s3()}) {
    RawPresentation expanded = expand_to_raw(*table, 30);
    for (const char* text :
         {"ab", "ba", "aabb", "a^3 b^2", "b^4 a", "abba", "a b a b a"}) {
      Word w = word(*table, text);
      REQUIRE(rewrite_normalize(expanded, w) == normalize(*table, w));
    }
  }
}

TEST_SUITE_END();

}  // namespace
}  // namespace monosg

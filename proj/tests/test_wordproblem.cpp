// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#include "monosg/wordproblem.hpp"

#include <doctest.h>

#include <random>
#include <vector>

#include "monosg/oracle.hpp"
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

TEST_SUITE_BEGIN("wordproblem");

TEST_CASE("absorption examples") {
  CHECK(absorb(s1(), L("a"), 3, L("b")) == nf("a", 4));
  CHECK(absorb(s1(), L("b"), 2, L("a")) == nf("a", 3));
  CHECK(absorb(s1(), L("a"), 1, L("a")) == nf("a", 2));
  CHECK(absorb(s2(), L("b"), 7, L("a")) == nf("b", 8));
  CHECK(absorb(s3(), L("b"), 3, L("c")) == nf("c", 4));
  CHECK_THROWS_AS(absorb(s1(), L("a"), 0, L("b")), Error);
}

TEST_CASE("absorption failures name the gap") {
  CHECK_THROWS_WITH_AS(absorb(s0(), L("a"), 2, L("b")),
                       doctest::Contains("no relations for pair"), EvalError);

  auto parsed = parse_presentation(
      "letters: a b\nexc: a 1 b -> a 2\nap: a b D=2 t=0 k0=2 -> a e0=3 step=2");
  const auto& partial = std::get<ActionTable>(parsed);
  CHECK(absorb(partial, L("a"), 4, L("b")) == nf("a", 5));
  CHECK_THROWS_WITH_AS(absorb(partial, L("a"), 3, L("b")),
                       doctest::Contains("uncovered exponent"), EvalError);
}

TEST_CASE("normalization examples") {
  CHECK(normalize(s1(), word(s1(), "abab")) == nf("a", 4));
  CHECK(normalize(s1(), word(s1(), "bbb")) == nf("b", 3));
  CHECK(normalize(s2(), word(s2(), "ba")) == nf("b", 2));
  CHECK(normalize(s3(), word(s3(), "a^2 b c a")) == nf("c", 5));
  CHECK(normalize(s0(), word(s0(), "a^5 a")) == nf("a", 6));
}

TEST_CASE("equality examples") {
  CHECK(equal(s1(), word(s1(), "ab"), word(s1(), "ba")));
  CHECK_FALSE(equal(s1(), word(s1(), "a"), word(s1(), "b")));
  CHECK_FALSE(equal(s2(), word(s2(), "ab"), word(s2(), "ba")));
}

TEST_CASE("multiplication examples") {
  CHECK(multiply(s1(), nf("a", 2), nf("b", 3)) == nf("a", 5));
  CHECK(multiply(s1(), nf("a", 2), nf("a", 3)) == nf("a", 5));
  CHECK(multiply(s2(), nf("b", 1), nf("a", 1)) == nf("b", 2));
}

TEST_CASE("normalization agrees with the rewriting oracle") {
  struct Case {
    const ActionTable* table;
    const RawPresentation* raw;
  };
  for (const Case& c : {Case{&s1(), &testing::s1_raw()},
                        Case{&s2(), &testing::s2_raw()}}) {
    RawPresentation expanded = expand_to_raw(*c.table, 40);
    const auto& letters = c.table->alphabet().letters();
    // All alternating words with <= 4 runs and exponents <= 4.
    for (std::size_t first = 0; first < letters.size(); ++first) {
      for (int len = 1; len <= 4; ++len) {
        std::vector<int> exps(len, 1);
        while (true) {
          std::vector<Word::Run> runs;
          for (int i = 0; i < len; ++i)
            runs.emplace_back(letters[(first + i) % letters.size()], exps[i]);
          Word w(runs);
          REQUIRE(normalize(*c.table, w) == rewrite_normalize(expanded, w));

          int i = 0;
          while (i < len && exps[i] == 4) exps[i++] = 1;
          if (i == len) break;
          ++exps[i];
        }
      }
    }
  }
}

TEST_CASE("normalize is a homomorphism") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 1);
  std::uniform_int_distribution<int> exp(1, 5);
  std::uniform_int_distribution<int> len(1, 5);
  for (const ActionTable* table : {&s1(), &s2()}) {
    const auto& letters = table->alphabet().letters();
    auto random_word = [&] {
      std::vector<Word::Run> runs;
      int n = len(rng);
      for (int i = 0; i < n; ++i)
        runs.emplace_back(letters[letter(rng)], exp(rng));
      return Word(runs);
    };
    for (int trial = 0; trial < 250; ++trial) {
      Word u = random_word();
      Word v = random_word();
      REQUIRE(normalize(*table, u.concat(v)) ==
              multiply(*table, normalize(*table, u), normalize(*table, v)));
    }
  }
}

TEST_CASE("multiplication is associative on fixture triples") {
  for (const ActionTable* table : {&s1(), &s2(), &s3()}) {
    std::vector<NormalForm> forms;
    for (const Letter& l : table->alphabet().letters()) {
      for (Nat e = 1; e <= 6; ++e) forms.emplace_back(l, e);
    }
    for (const NormalForm& x : forms) {
      for (const NormalForm& y : forms) {
        NormalForm xy = multiply(*table, x, y);
        for (const NormalForm& z : forms) {
          REQUIRE(multiply(*table, xy, z) ==
                  multiply(*table, x, multiply(*table, y, z)));
        }
      }
    }
  }
}

TEST_CASE("equality is a congruence") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(0, 1);
  std::uniform_int_distribution<int> exp(1, 4);
  const ActionTable& table = s1();
  const auto& letters = table.alphabet().letters();
  auto random_word = [&] {
    std::vector<Word::Run> runs;
    int n = 1 + letter(rng) + letter(rng);
    for (int i = 0; i < n; ++i)
      runs.emplace_back(letters[letter(rng)], exp(rng));
    return Word(runs);
  };
  for (int trial = 0; trial < 200; ++trial) {
    Word u = random_word();
    Word v = random_word();
    Word w = random_word();
    if (!equal(table, u, v)) continue;
    REQUIRE(equal(table, u.concat(w), v.concat(w)));
    REQUIRE(equal(table, w.concat(u), w.concat(v)));
  }
}

TEST_CASE("closed-form absorption matches small-scale iteration") {
  RawPresentation expanded = expand_to_raw(s1(), 210);
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> small(1, 200);
  for (int trial = 0; trial < 50; ++trial) {
    Nat s = small(rng);
    Word w({{L("a"), s}, {L("b"), 1}});
    CHECK(absorb(s1(), L("a"), s, L("b")) == rewrite_normalize(expanded, w));
    CHECK(absorb(s1(), L("b"), s, L("a")) ==
          rewrite_normalize(expanded, Word({{L("b"), s}, {L("a"), 1}})));
  }
}

TEST_CASE("closed-form absorption is shift-consistent at large scale") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long long> big(1, 1'000'000'000'000LL);
  for (int trial = 0; trial < 100; ++trial) {
    Nat s = big(rng);
    for (const auto& [a, b] : {std::pair{L("a"), L("b")}, {L("b"), L("a")}}) {
      Nat period = s1().find_pair(a, b)->period;
      CHECK(absorb(s1(), a, s + period, b) ==
            multiply(s1(), NormalForm(a, period), absorb(s1(), a, s, b)));
    }
  }
}

TEST_CASE("word parsing") {
  const Alphabet& ab = s1().alphabet();
  CHECK(parse_word(ab, "a^3 b^2 a") ==
        Word({{L("a"), 3}, {L("b"), 2}, {L("a"), 1}}));
  CHECK(parse_word(ab, "abab") ==
        Word({{L("a"), 1}, {L("b"), 1}, {L("a"), 1}, {L("b"), 1}}));
  CHECK(parse_word(ab, "  a^12b ") == Word({{L("a"), 12}, {L("b"), 1}}));
  CHECK(parse_word(ab, "a a") == Word(std::vector<Word::Run>{{L("a"), 2}}));
  CHECK_THROWS_AS(parse_word(ab, ""), ParseError);
  CHECK_THROWS_AS(parse_word(ab, "c"), ParseError);
  CHECK_THROWS_AS(parse_word(ab, "a^"), ParseError);
  CHECK_THROWS_AS(parse_word(ab, "a^0"), ParseError);

  // Longest letter wins when one name prefixes another.
  Alphabet tricky({L("x"), L("xy")});
  CHECK(parse_word(tricky, "xyx") == Word({{L("xy"), 1}, {L("x"), 1}}));

  CHECK(parse_normal_form(ab, "b^12") == nf("b", 12));
  CHECK_THROWS_AS(parse_normal_form(ab, "ab"), ParseError);
}

TEST_SUITE_END();

}  // namespace
}  // namespace monosg

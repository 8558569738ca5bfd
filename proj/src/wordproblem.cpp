// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#include "monosg/wordproblem.hpp"

#include <algorithm>

namespace monosg {

namespace {

// Absorbing a run letter-by-letter only stays slow while the running normal
// form keeps landing off the run's letter. The budget turns a pathological
// input into an error instead of an unbounded loop.
const Nat kFoldBudget = 1'000'000;

}  // namespace

NormalForm absorb(const ActionTable& table, const Letter& a, const Nat& s,
                  const Letter& b) {
  if (s < 1) throw Error("absorb: exponent must be >= 1");
  if (a == b) return NormalForm(a, s + 1);

  const PairAction* act = table.find_pair(a, b);
  if (act == nullptr)
    throw EvalError("no relations for pair (" + a.id + "," + b.id + ")");

  if (s <= act->cutoff) {
    auto it = act->exceptions.find(s);
    if (it == act->exceptions.end())
      throw EvalError("uncovered exponent " + a.id + "^" + nat_str(s) + " " +
                      b.id);
    return it->second;
  }

  auto it = act->rules.find(mod_floor(s, act->period));
  if (it == act->rules.end() || s < it->second.k0)
    throw EvalError("uncovered exponent " + a.id + "^" + nat_str(s) + " " +
                    b.id);
  const ResidueRule& rule = it->second;
  Nat f = (s - rule.k0) / act->period;
  return NormalForm(rule.target, rule.e0 + f * rule.step);
}

NormalForm normalize(const ActionTable& table, const Word& u) {
  const auto& runs = u.runs();
  NormalForm acc(runs.front().first, runs.front().second);
  for (std::size_t i = 1; i < runs.size(); ++i) {
    const auto& [y, count] = runs[i];
    Nat left = count;
    Nat budget = kFoldBudget;
    while (left > 0) {
      if (acc.letter == y) {
        acc.exponent += left;
        break;
      }
      if (budget == 0)
        throw Error("normalize: run of " + y.id + "^" + nat_str(count) +
                    " exceeds the fold budget");
      --budget;
      acc = absorb(table, acc.letter, acc.exponent, y);
      --left;
    }
  }
  return acc;
}

bool equal(const ActionTable& table, const Word& u, const Word& v) {
  return normalize(table, u) == normalize(table, v);
}

NormalForm multiply(const ActionTable& table, const NormalForm& x,
                    const NormalForm& y) {
  return normalize(
      table, Word({{x.letter, x.exponent}, {y.letter, y.exponent}}));
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
  std::vector<Word::Run> runs;
  std::size_t i = 0;
  auto fail = [&](const std::string& message) -> void {
    throw ParseError("word \"" + text + "\", col " + std::to_string(i + 1) +
                     ": " + message);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const Letter* best = nullptr;
    for (const Letter& l : alphabet.letters()) {
      if (text.compare(i, l.id.size(), l.id) == 0 &&
          (!best || l.id.size() > best->id.size())) {
        best = &l;
      }
    }
    if (!best) fail("no letter matches here");
    i += best->id.size();
    Nat exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start) fail("expected digits after '^'");
      exponent = Nat(text.substr(start, i - start));
      if (exponent < 1) fail("exponent must be >= 1");
    }
    runs.emplace_back(*best, std::move(exponent));
  }
  if (runs.empty()) throw ParseError("word \"" + text + "\" is empty");
  return Word(std::move(runs));
}

NormalForm parse_normal_form(const Alphabet& alphabet,
                             const std::string& text) {
  Word w = parse_word(alphabet, text);
  if (w.runs().size() != 1)
    throw ParseError("\"" + text + "\" is not a single power");
  return NormalForm(w.runs().front().first, w.runs().front().second);
}

}  // namespace monosg

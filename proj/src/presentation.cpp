// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#include "monosg/presentation.hpp"

#include <algorithm>
#include <istream>
#include <optional>

#include "monosg/oracle.hpp"
#include "monosg/wordproblem.hpp"

namespace monosg {

namespace {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, std::size_t col,
                       const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ", col " +
                   std::to_string(col) + ": " + message);
}

class LineReader {
 public:
  LineReader(std::size_t line_no, std::vector<Token> tokens)
      : line_no_(line_no), tokens_(std::move(tokens)) {}

  bool done() const { return next_ >= tokens_.size(); }

  const Token& take(const std::string& what) {
    if (done()) fail(line_no_, last_col(), "expected " + what);
    return tokens_[next_++];
  }

  std::string letter(const Alphabet& alphabet) {
    const Token& t = take("a letter");
    if (!alphabet.find(t.text))
      fail(line_no_, t.col, "unknown letter '" + t.text + "'");
    return t.text;
  }

  Nat natural(const std::string& what, const Nat& min) {
    const Token& t = take(what);
    return checked(t.text, t.col, what, min);
  }

  /// "k0=7" style token with a fixed key.
  Nat keyed(const std::string& key, const Nat& min) {
    const Token& t = take(key + "=<natural>");
    auto eq = t.text.find('=');
    if (eq == std::string::npos || t.text.substr(0, eq) != key)
      fail(line_no_, t.col, "expected " + key + "=<natural>");
    return checked(t.text.substr(eq + 1), t.col + eq + 1, key, min);
  }

  void arrow() {
    const Token& t = take("'->'");
    if (t.text != "->") fail(line_no_, t.col, "expected '->'");
  }

  void finish() {
    if (!done())
      fail(line_no_, tokens_[next_].col,
           "unexpected trailing token '" + tokens_[next_].text + "'");
  }

  std::size_t line_no() const { return line_no_; }
  std::size_t last_col() const {
    return tokens_.empty() ? 1 : tokens_.back().col + tokens_.back().text.size();
  }

 private:
  Nat checked(const std::string& text, std::size_t col,
              const std::string& what, const Nat& min) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
          return c >= '0' && c <= '9';
        })) {
      fail(line_no_, col, "expected natural for " + what + ", got '" + text + "'");
    }
    Nat value(text);
    if (value < min)
      fail(line_no_, col,
           what + " must be >= " + nat_str(min) + ", got " + nat_str(value));
    return value;
  }

  std::size_t line_no_;
  std::vector<Token> tokens_;
  std::size_t next_ = 0;
};

using PairKey = std::pair<Letter, Letter>;

std::string pair_loc(const PairKey& p) {
  return "(" + p.first.id + "," + p.second.id + ")";
}

/// Minimal progression of one target letter within one pair: anchored at its
/// first hit, difference and step fixed by the second.
struct DetectedAp {
  Nat k1;
  Nat e1;
  std::optional<Nat> q;  // set once a second hit arrives
  Nat s = 0;

  bool covers(const Nat& k) const {
    return q && k >= k1 && (k - k1) % *q == 0;
  }
  Nat value_at(const Nat& k) const { return e1 + s * ((k - k1) / *q); }
};

}  // namespace

ActionTable::ActionTable(Alphabet alphabet, PairMap pairs)
    : alphabet_(std::move(alphabet)), pairs_(std::move(pairs)) {
  for (const auto& [key, act] : pairs_) {
    const std::string loc = pair_loc(key);
    if (!alphabet_.contains(key.first) || !alphabet_.contains(key.second))
      throw Error(loc + ": letter not in alphabet");
    if (key.first == key.second)
      throw Error(loc + ": same-letter pairs are implicit and not stored");
    if (act.period < 1) throw Error(loc + ": period must be >= 1");
    if (act.cutoff < 0) throw Error(loc + ": negative cutoff");
    for (const auto& [k, nf] : act.exceptions) {
      if (k < 1 || k > act.cutoff)
        throw Error(loc + ": exception exponent " + nat_str(k) +
                    " outside 1..cutoff");
      if (!alphabet_.contains(nf.letter))
        throw Error(loc + ": exception target not in alphabet");
    }
    for (const auto& [t, rule] : act.rules) {
      if (t < 0 || t >= act.period)
        throw Error(loc + ": rule residue " + nat_str(t) + " outside 0..period-1");
      if (rule.k0 < 1 || mod_floor(rule.k0, act.period) != t)
        throw Error(loc + ": rule anchor " + nat_str(rule.k0) +
                    " not in residue class " + nat_str(t));
      if (rule.e0 < 1) throw Error(loc + ": rule base exponent must be >= 1");
      if (rule.step < 0) throw Error(loc + ": rule step must be >= 0");
      if (!alphabet_.contains(rule.target))
        throw Error(loc + ": rule target not in alphabet");
    }
  }
}

const PairAction* ActionTable::find_pair(const Letter& a,
                                         const Letter& b) const {
  auto it = pairs_.find({a, b});
  return it == pairs_.end() ? nullptr : &it->second;
}

Nat ActionTable::max_cutoff() const {
  Nat m = 0;
  for (const auto& [key, act] : pairs_) m = std::max(m, act.cutoff);
  return m;
}

Nat ActionTable::lcm_periods() const {
  Nat l = 1;
  for (const auto& [key, act] : pairs_) l = nat_lcm(l, act.period);
  return l;
}

ParsedPresentation parse_presentation(std::istream& in) {
  std::optional<Alphabet> alphabet;
  std::vector<RawRelation> relations;
  std::map<PairKey, std::map<Nat, NormalForm>> exceptions;
  std::map<PairKey, Nat> periods;
  std::map<PairKey, std::map<Nat, ResidueRule>> rules;
  bool saw_raw = false;
  bool saw_compiled = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    LineReader r(line_no, std::move(tokens));
    const Token& tag = r.take("a line tag");

    if (tag.text == "letters:") {
      if (alphabet) fail(line_no, tag.col, "duplicate letters: line");
      std::vector<Letter> letters;
      while (!r.done()) letters.push_back({r.take("a letter").text});
      if (letters.empty()) fail(line_no, tag.col, "letters: line is empty");
      try {
        alphabet.emplace(std::move(letters));
      } catch (const Error& e) {
        fail(line_no, tag.col, e.what());
      }
      continue;
    }

    if (!alphabet)
      fail(line_no, tag.col, "letters: line must come first");

    if (tag.text == "rel:" || tag.text == "exc:") {
      Letter a{r.letter(*alphabet)};
      Nat k = r.natural("exponent", 1);
      Letter b{r.letter(*alphabet)};
      r.arrow();
      Letter c{r.letter(*alphabet)};
      Nat m = r.natural("exponent", 1);
      r.finish();
      if (tag.text == "rel:") {
        saw_raw = true;
        for (const RawRelation& prev : relations) {
          if (prev.a == a && prev.k == k && prev.b == b)
            fail(line_no, tag.col,
                 "duplicate relation for " + a.id + "^" + nat_str(k) + " " + b.id);
        }
        relations.push_back({a, k, b, c, m});
      } else {
        saw_compiled = true;
        if (a == b)
          fail(line_no, tag.col, "same-letter pairs are implicit, not stored");
        auto [it, fresh] = exceptions[{a, b}].emplace(k, NormalForm(c, m));
        if (!fresh)
          fail(line_no, tag.col,
               "duplicate exception for " + a.id + "^" + nat_str(k) + " " + b.id);
      }
      continue;
    }

    if (tag.text == "ap:") {
      saw_compiled = true;
      Letter a{r.letter(*alphabet)};
      Letter b{r.letter(*alphabet)};
      Nat period = r.keyed("D", 1);
      Nat t = r.keyed("t", 0);
      Nat k0 = r.keyed("k0", 1);
      r.arrow();
      Letter c{r.letter(*alphabet)};
      Nat e0 = r.keyed("e0", 1);
      Nat step = r.keyed("step", 0);
      r.finish();
      if (a == b)
        fail(line_no, tag.col, "same-letter pairs are implicit, not stored");
      PairKey key{a, b};
      auto [pit, fresh] = periods.emplace(key, period);
      if (!fresh && pit->second != period)
        fail(line_no, tag.col, "conflicting periods for pair " + pair_loc(key));
      if (t >= period) fail(line_no, tag.col, "residue t must be < D");
      auto [rit, rfresh] = rules[key].emplace(t, ResidueRule{c, k0, e0, step});
      if (!rfresh)
        fail(line_no, tag.col,
             "duplicate rule for residue " + nat_str(t) + " of " + pair_loc(key));
      continue;
    }

    fail(line_no, tag.col, "unknown line tag '" + tag.text + "'");
  }

  if (!alphabet) throw ParseError("missing letters: line");
  if (saw_raw && saw_compiled)
    throw ParseError("file mixes raw rel: lines with compiled ap:/exc: lines");

  if (!saw_compiled) return RawPresentation{*alphabet, std::move(relations)};

  ActionTable::PairMap pairs;
  for (const auto& [key, excs] : exceptions) (void)pairs[key];
  for (const auto& [key, rmap] : rules) (void)pairs[key];
  for (auto& [key, act] : pairs) {
    if (auto it = exceptions.find(key); it != exceptions.end()) {
      act.exceptions = it->second;
      act.cutoff = act.exceptions.rbegin()->first;
    }
    if (auto it = periods.find(key); it != periods.end())
      act.period = it->second;
    if (auto it = rules.find(key); it != rules.end()) act.rules = it->second;
  }
  return ActionTable(*alphabet, std::move(pairs));
}

ActionTable compile(const RawPresentation& raw) {
  std::map<PairKey, std::map<Nat, NormalForm>> grouped;
  for (const RawRelation& rel : raw.relations) {
    if (!raw.alphabet.contains(rel.a) || !raw.alphabet.contains(rel.b) ||
        !raw.alphabet.contains(rel.c))
      throw CompileError("relation uses a letter not in the alphabet");
    if (rel.k < 1 || rel.m < 1)
      throw CompileError("relation exponents must be >= 1");
    if (rel.a == rel.b) {
      // a^k a = a^{k+1} holds identically; a relation claiming anything else
      // cannot hold in a disjoint union of copies.
      if (rel.c != rel.a || rel.m != rel.k + 1)
        throw CompileError("inconsistent: " + rel.a.id + "^" + nat_str(rel.k) +
                           " " + rel.b.id + " = " + rel.c.id + "^" +
                           nat_str(rel.m) + " contradicts same-letter product");
      continue;
    }
    auto [it, fresh] =
        grouped[{rel.a, rel.b}].emplace(rel.k, NormalForm(rel.c, rel.m));
    if (!fresh)
      throw CompileError("duplicate relation for " + rel.a.id + "^" +
                         nat_str(rel.k) + " " + rel.b.id);
  }

  ActionTable::PairMap pairs;
  for (const auto& [key, rels] : grouped) {
    const std::string loc = pair_loc(key);
    const Nat K = rels.rbegin()->first;
    for (Nat k = 1; k <= K; ++k) {
      if (rels.count(k) == 0)
        throw CompileError("insufficient relations: " + loc + " skips k=" +
                           nat_str(k) + " (provided up to k=" + nat_str(K) + ")");
    }

    // First two hits of each target letter pin its minimal progression.
    std::map<Letter, DetectedAp> aps;
    for (const auto& [k, nf] : rels) {
      auto it = aps.find(nf.letter);
      if (it == aps.end()) {
        aps.emplace(nf.letter, DetectedAp{k, nf.exponent, std::nullopt, 0});
      } else if (!it->second.q) {
        DetectedAp& ap = it->second;
        if (nf.exponent < ap.e1)
          throw CompileError(
              "inconsistent: " + loc + " target exponents decrease from k=" +
              nat_str(ap.k1) + " to k=" + nat_str(k));
        ap.q = k - ap.k1;
        ap.s = nf.exponent - ap.e1;
      }
    }

    Nat period = 0;
    for (const auto& [letter, ap] : aps) {
      if (ap.q) period = period == 0 ? *ap.q : nat_lcm(period, *ap.q);
    }
    if (period == 0)
      throw CompileError("insufficient relations: " + loc +
                         " has no target letter observed twice; extend the "
                         "relation range");

    // Every provided relation either lies on exactly one detected
    // progression and matches its extrapolation, or is below all coverage.
    Nat cutoff = 0;
    for (const auto& [k, nf] : rels) {
      const Letter* covering = nullptr;
      for (const auto& [letter, ap] : aps) {
        if (!ap.covers(k)) continue;
        if (covering)
          throw CompileError("inconsistent: " + loc + " k=" + nat_str(k) +
                             " lies on the progressions of both " +
                             covering->id + " and " + letter.id);
        covering = &letter;
        if (letter != nf.letter || ap.value_at(k) != nf.exponent)
          throw CompileError(
              "inconsistent: " + loc + " k=" + nat_str(k) + " gives " +
              nf.str() + " but the minimal progression of " + letter.id +
              " forces " + NormalForm(letter, ap.value_at(k)).str());
      }
      if (!covering) cutoff = std::max(cutoff, k);
    }

    // One rule per residue class; a class claimed by two letters cannot hold
    // in any semigroup, a class claimed by none is undetermined.
    std::map<Nat, ResidueRule> rules;
    for (Nat t = 0; t < period; ++t) {
      const Letter* owner = nullptr;
      const DetectedAp* owner_ap = nullptr;
      for (const auto& [letter, ap] : aps) {
        if (!ap.q || mod_floor(t - ap.k1, *ap.q) != 0) continue;
        if (owner)
          throw CompileError("inconsistent: " + loc + " residue class " +
                             nat_str(t) + " mod " + nat_str(period) +
                             " is claimed by both " + owner->id + " and " +
                             letter.id);
        owner = &letter;
        owner_ap = &ap;
      }
      if (!owner)
        throw CompileError("insufficient relations: " + loc +
                           " residue class " + nat_str(t) + " mod " +
                           nat_str(period) + " has no progression; extend the "
                           "relation range");

      Nat hits = 0;
      for (const auto& [k, nf] : rels) {
        if (mod_floor(k, period) == t && owner_ap->covers(k)) ++hits;
      }
      if (hits < 2)
        throw CompileError("insufficient relations: " + loc +
                           " residue class " + nat_str(t) + " mod " +
                           nat_str(period) + " has fewer than two hits; "
                           "extend the relation range");

      Nat k0 = owner_ap->k1;
      while (k0 <= cutoff || mod_floor(k0, period) != t) k0 += *owner_ap->q;
      Nat f0 = (k0 - owner_ap->k1) / *owner_ap->q;
      rules.emplace(t, ResidueRule{*owner, k0, owner_ap->e1 + owner_ap->s * f0,
                                   owner_ap->s * (period / *owner_ap->q)});
    }

    PairAction act;
    act.cutoff = cutoff;
    act.period = period;
    act.rules = std::move(rules);
    for (const auto& [k, nf] : rels) {
      if (k <= cutoff) act.exceptions.emplace(k, nf);
    }
    pairs.emplace(key, std::move(act));
  }

  return ActionTable(raw.alphabet, std::move(pairs));
}

Diagnostics validate(const ActionTable& table, const ValidateOptions& options) {
  Diagnostics diags;
  auto report = [&diags](std::string loc, std::string message) {
    diags.push_back({Diagnostic::Severity::error, std::move(loc), std::move(message)});
  };

  const auto& letters = table.alphabet().letters();
  for (const Letter& a : letters) {
    for (const Letter& b : letters) {
      if (a != b && table.find_pair(a, b) == nullptr)
        report(pair_loc({a, b}), "missing relations for pair");
    }
  }

  for (const auto& [key, act] : table.pairs()) {
    const std::string loc = pair_loc(key);

    for (Nat k = 1; k <= act.cutoff; ++k) {
      if (act.exceptions.count(k) == 0)
        report(loc + " k=" + nat_str(k), "uncovered exponent below cutoff");
    }
    for (Nat t = 0; t < act.period; ++t) {
      auto it = act.rules.find(t);
      if (it == act.rules.end()) {
        report(loc + " t=" + nat_str(t),
               "uncovered exponent: residue class has no rule");
        continue;
      }
      const ResidueRule& rule = it->second;
      if (rule.k0 <= act.cutoff)
        report(loc + " t=" + nat_str(t), "rule overlaps exceptions");
      else if (rule.k0 > act.cutoff + act.period)
        report(loc + " t=" + nat_str(t),
               "uncovered exponent between cutoff and rule anchor");
    }
    for (const auto& [k, nf] : act.exceptions) {
      auto it = act.rules.find(mod_floor(k, act.period));
      if (it != act.rules.end() && k >= it->second.k0 &&
          nf.letter != it->second.target)
        report(loc + " k=" + nat_str(k),
               "two target letters in one residue class");
    }
  }

  // Period consistency: right-multiplying by b then raising the source
  // exponent by one period must match applying the period rule directly.
  for (const auto& [key, act] : table.pairs()) {
    const auto& [a, b] = key;
    const std::string loc = pair_loc(key);
    const Nat bound = act.cutoff + 3 * act.period;
    for (Nat k = 1; k <= bound; ++k) {
      try {
        NormalForm lhs = absorb(table, a, k + act.period, b);
        NormalForm inner = absorb(table, a, k, b);
        NormalForm rhs =
            multiply(table, NormalForm(a, act.period), inner);
        if (lhs != rhs)
          report(loc + " k=" + nat_str(k),
                 "period consistency violated: a^{k+D} b = " + lhs.str() +
                     " but a^D (a^k b) = " + rhs.str());
      } catch (const EvalError&) {
        // One side not table-computable; coverage diagnostics already
        // explain why.
      }
    }
  }

  if (options.deep) {
    if (auto counter = check_associativity(table, options.deep_bound)) {
      const auto& [x, y, z] = *counter;
      report("(" + x.str() + "," + y.str() + "," + z.str() + ")",
             "associativity counterexample");
    }
  }

  return diags;
}

std::string to_text(const ActionTable& table) {
  std::ostringstream os;
  os << "letters:";
  for (const Letter& l : table.alphabet().letters()) os << ' ' << l.id;
  os << '\n';
  for (const auto& [key, act] : table.pairs()) {
    const auto& [a, b] = key;
    for (const auto& [k, nf] : act.exceptions) {
      os << "exc: " << a.id << ' ' << k << ' ' << b.id << " -> "
         << nf.letter.id << ' ' << nf.exponent << '\n';
    }
    for (const auto& [t, rule] : act.rules) {
      os << "ap: " << a.id << ' ' << b.id << " D=" << act.period << " t=" << t
         << " k0=" << rule.k0 << " -> " << rule.target.id << " e0=" << rule.e0
         << " step=" << rule.step << '\n';
    }
  }
  return os.str();
}

RawPresentation expand_to_raw(const ActionTable& table, const Nat& max_k) {
  RawPresentation raw{table.alphabet(), {}};
  for (const auto& [key, act] : table.pairs()) {
    const auto& [a, b] = key;
    for (Nat k = 1; k <= max_k; ++k) {
      NormalForm nf = absorb(table, a, k, b);
      raw.relations.push_back({a, k, b, nf.letter, nf.exponent});
    }
  }
  return raw;
}

ActionTable to_table(const ParsedPresentation& parsed) {
  if (const auto* raw = std::get_if<RawPresentation>(&parsed)) {
    return compile(*raw);
  }
  return std::get<ActionTable>(parsed);
}

}  // namespace monosg

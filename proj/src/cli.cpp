// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#include "monosg/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "monosg/membership.hpp"
#include "monosg/oracle.hpp"
#include "monosg/presentation.hpp"
#include "monosg/wordproblem.hpp"

namespace monosg::cli {

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;
constexpr int kCheckFailure = 3;

ParsedPresentation load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_presentation(in);
}

std::vector<NormalForm> parse_generators(const Alphabet& alphabet,
                                         const std::string& text) {
  std::vector<NormalForm> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::size_t end = comma == std::string::npos ? text.size() : comma;
    std::string item = text.substr(start, end - start);
    if (item.find_first_not_of(" \t") != std::string::npos)
      gens.push_back(parse_normal_form(alphabet, item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (gens.empty()) throw ParseError("generator list is empty");
  return gens;
}

std::string triples_line(const ActionTable& table,
                         const SaturationState& state) {
  std::string line;
  for (const Letter& l : table.alphabet().letters()) {
    auto it = state.copies.find(l);
    if (it == state.copies.end()) continue;
    if (!line.empty()) line += "  ";
    line += l.id + ": " + triple_str(it->second.triple);
  }
  return line;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"decision procedures for disjoint unions of free monogenic "
               "semigroups"};
  app.require_subcommand(1);

  std::string file;
  std::string output_path;
  std::string word_u;
  std::string word_v;
  std::string gens_text;
  std::string query_text;
  Nat window = 0;
  bool deep = false;
  unsigned long long bound = 6;
  unsigned long long window_arg = 0;

  CLI::App* cmd_compile = app.add_subcommand(
      "compile", "compile raw relations into an action table");
  cmd_compile->add_option("file", file)->required();
  cmd_compile->add_option("-o,--output", output_path,
                          "write the compiled table here instead of stdout");

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "check a table's invariants");
  cmd_validate->add_option("file", file)->required();
  cmd_validate->add_flag("--deep", deep,
                         "also run the brute-force associativity check");
  cmd_validate->add_option("--bound", bound,
                           "exponent bound for the deep check");

  CLI::App* cmd_normalize =
      app.add_subcommand("normalize", "print the normal form of a word");
  cmd_normalize->add_option("file", file)->required();
  cmd_normalize->add_option("word", word_u)->required();

  CLI::App* cmd_equal =
      app.add_subcommand("equal", "decide whether two words are equal");
  cmd_equal->add_option("file", file)->required();
  cmd_equal->add_option("u", word_u)->required();
  cmd_equal->add_option("v", word_v)->required();

  CLI::App* cmd_member = app.add_subcommand(
      "member", "decide membership in a finitely generated subsemigroup");
  cmd_member->add_option("file", file)->required();
  cmd_member->add_option("--gens", gens_text, "comma-separated generators")
      ->required();
  cmd_member->add_option("--query", query_text, "element to decide")
      ->required();
  cmd_member->add_option("--window", window_arg,
                         "override the action-profile sampling window");

  CLI::App* cmd_selfcheck =
      app.add_subcommand("selfcheck", "run the brute-force oracle checks");
  cmd_selfcheck->add_option("file", file)->required();
  cmd_selfcheck->add_option("--bound", bound,
                            "exponent bound for the oracle scans");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (cmd_compile->parsed()) {
      ActionTable table = to_table(load(file));
      std::string text = to_text(table);
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream of(output_path);
        if (!of) throw ParseError("cannot write '" + output_path + "'");
        of << text;
      }
      return kTrue;
    }

    if (cmd_validate->parsed()) {
      ActionTable table = to_table(load(file));
      ValidateOptions options;
      options.deep = deep;
      options.deep_bound = Nat(bound);
      Diagnostics diags = validate(table, options);
      if (diags.empty()) {
        out << "valid\n";
        return kTrue;
      }
      for (const Diagnostic& d : diags)
        err << "error: " << d.location << ": " << d.message << '\n';
      return kCheckFailure;
    }

    if (cmd_normalize->parsed()) {
      ActionTable table = to_table(load(file));
      Word u = parse_word(table.alphabet(), word_u);
      out << normalize(table, u).str() << '\n';
      return kTrue;
    }

    if (cmd_equal->parsed()) {
      ActionTable table = to_table(load(file));
      Word u = parse_word(table.alphabet(), word_u);
      Word v = parse_word(table.alphabet(), word_v);
      bool eq = equal(table, u, v);
      out << (eq ? "equal" : "not-equal") << '\n';
      return eq ? kTrue : kFalse;
    }

    if (cmd_member->parsed()) {
      ActionTable table = to_table(load(file));
      std::vector<NormalForm> gens =
          parse_generators(table.alphabet(), gens_text);
      NormalForm query = parse_normal_form(table.alphabet(), query_text);
      window = Nat(window_arg);
      SaturationResult result = saturate(table, gens, window);
      bool member = is_member(result.state, query);
      out << (member ? "member" : "not-member") << '\n';
      out << triples_line(table, result.state) << '\n';
      return member ? kTrue : kFalse;
    }

    if (cmd_selfcheck->parsed()) {
      ActionTable table = to_table(load(file));
      Nat b(bound);
      if (auto counter = check_associativity(table, b)) {
        const auto& [x, y, z] = *counter;
        err << "error: associativity counterexample: (" << x.str() << ", "
            << y.str() << ", " << z.str() << ")\n";
        return kCheckFailure;
      }
      if (auto issue = check_disjointness(table, b)) {
        err << "error: " << *issue << '\n';
        return kCheckFailure;
      }
      out << "selfcheck passed\n";
      return kTrue;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CompileError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailure;
  }

  err << "error: no subcommand\n";
  return kInputError;
}

}  // namespace monosg::cli

// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#include "monosg/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.hpp"

namespace monosg {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return testing::fixture_path(name);
}

TEST_SUITE_BEGIN("cli");

TEST_CASE("normalize prints the normal form") {
  CliResult r = run_cli({"normalize", fixture("s1.sgp"), "abab"});
  CHECK(r.code == 0);
  CHECK(r.out == "a^4\n");
  CHECK(r.err.empty());
}

TEST_CASE("equal distinguishes the fixtures") {
  CliResult r = run_cli({"equal", fixture("s2.sgp"), "ab", "ba"});
  CHECK(r.code == 1);
  CHECK(r.out == "not-equal\n");

  r = run_cli({"equal", fixture("s1.sgp"), "ab", "ba"});
  CHECK(r.code == 0);
  CHECK(r.out == "equal\n");
}

TEST_CASE("member reports the saturated triples") {
  CliResult r = run_cli({"member", fixture("s1.sgp"), "--gens", "a^3,b^2",
                         "--query", "a^4"});
  CHECK(r.code == 1);
  CHECK(r.out == "not-member\na: [d=1, N=5, F={3}]  b: [d=2, N=2, F={}]\n");

  r = run_cli({"member", fixture("s1.sgp"), "--gens", "a^3,b^2", "--query",
               "a^5"});
  CHECK(r.code == 0);
  CHECK(r.out == "member\na: [d=1, N=5, F={3}]  b: [d=2, N=2, F={}]\n");

  r = run_cli({"member", fixture("s1.sgp"), "--gens", "a^3, b^2", "--query",
               "b^4", "--window", "16"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 7) == "member\n");
}

TEST_CASE("validate passes the fixtures and fails the broken table") {
  CliResult r = run_cli({"validate", fixture("s1.sgp")});
  CHECK(r.code == 0);
  CHECK(r.out == "valid\n");

  r = run_cli({"validate", fixture("s1.sgp"), "--deep", "--bound", "4"});
  CHECK(r.code == 0);

  std::string broken = "cli_broken_table.sgp";
  {
    std::ofstream f(broken);
    f << "letters: a b\nap: a b D=1 t=0 k0=1 -> a e0=2 step=2\n"
         "ap: b a D=1 t=0 k0=1 -> a e0=2 step=1\n";
  }
  r = run_cli({"validate", broken});
  CHECK(r.code == 3);
  CHECK(r.err.find("period consistency") != std::string::npos);
  std::remove(broken.c_str());
}

TEST_CASE("compile emits a table that parses back") {
  CliResult r = run_cli({"compile", fixture("s1.sgp")});
  CHECK(r.code == 0);
  CHECK(r.out.find("letters: a b") == 0);
  CHECK(r.out.find("ap: a b D=1 t=0 k0=1 -> a e0=2 step=1") !=
        std::string::npos);
  CHECK(r.out.find("ap: b a D=1 t=0 k0=1 -> a e0=2 step=1") !=
        std::string::npos);

  std::string path = "cli_compiled_s1.sgp";
  r = run_cli({"compile", fixture("s1.sgp"), "-o", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CliResult reread = run_cli({"normalize", path, "a^7 b"});
  CHECK(reread.out == "a^8\n");
  std::remove(path.c_str());
}

TEST_CASE("selfcheck runs the oracle") {
  CliResult r = run_cli({"selfcheck", fixture("s2.sgp"), "--bound", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "selfcheck passed\n");

  std::string broken = "cli_broken_assoc.sgp";
  {
    std::ofstream f(broken);
    f << "letters: a b\nap: a b D=1 t=0 k0=1 -> a e0=2 step=2\n"
         "ap: b a D=1 t=0 k0=1 -> a e0=2 step=1\n";
  }
  r = run_cli({"selfcheck", broken, "--bound", "3"});
  CHECK(r.code == 3);
  CHECK(r.err.find("associativity counterexample") != std::string::npos);
  std::remove(broken.c_str());
}

TEST_CASE("input defects exit with code 2") {
  CHECK(run_cli({"normalize", "no_such_file.sgp", "a"}).code == 2);
  CHECK(run_cli({"normalize", fixture("s1.sgp"), "xyz"}).code == 2);
  CHECK(run_cli({"equal", fixture("s1.sgp"), "a"}).code == 2);
  CHECK(run_cli({"frobnicate", fixture("s1.sgp")}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"member", fixture("s1.sgp"), "--gens", ",", "--query", "a"})
            .code == 2);
  CHECK(run_cli({"member", fixture("s1.sgp"), "--gens", "ab", "--query", "a"})
            .code == 2);

  std::string insufficient = "cli_insufficient.sgp";
  {
    std::ofstream f(insufficient);
    f << "letters: a b\nrel: a 1 b -> a 2\n";
  }
  CHECK(run_cli({"normalize", insufficient, "ab"}).code == 2);
  std::remove(insufficient.c_str());
}

TEST_CASE("evaluation failures exit with code 3") {
  // The pair (b,a) is missing entirely, so normalize cannot fold "ba".
  std::string partial = "cli_partial.sgp";
  {
    std::ofstream f(partial);
    f << "letters: a b\nap: a b D=1 t=0 k0=1 -> a e0=2 step=1\n";
  }
  CliResult r = run_cli({"normalize", partial, "ba"});
  CHECK(r.code == 3);
  CHECK(r.err.find("no relations for pair") != std::string::npos);
  std::remove(partial.c_str());
}

TEST_CASE("help is printed on request") {
  CliResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("compile") != std::string::npos);
  CHECK(r.out.find("member") != std::string::npos);
}

TEST_SUITE_END();

}  // namespace
}  // namespace monosg

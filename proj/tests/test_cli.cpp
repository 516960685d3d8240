#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "barpoly/cli.hpp"
#include "test_util.hpp"

using namespace barpoly;
using testutil::C;
using testutil::L;
using testutil::P;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("compute prints canonical bar monomials") {
  auto r = run({"compute", "--n", "2", "--eta", "2,0"});
  CHECK(r.code == 0);
  CHECK(trimmed(r.out) == "x1^2 + (2*r + 1)*x1 + r*x2 + r^2 + r");

  r = run({"compute", "--n", "2", "--eta", "0,0"});
  CHECK(r.code == 0);
  CHECK(trimmed(r.out) == "1");

  r = run({"compute", "--n", "1", "--eta", "3"});
  CHECK(trimmed(r.out) == "x1^3 + 3*x1^2 + 2*x1");
}

TEST_CASE("compute methods agree and round-trip") {
  auto games = run({"compute", "--n", "3", "--eta", "1,0,4", "--method", "games"});
  auto trans = run({"compute", "--n", "3", "--eta", "1,0,4", "--method", "transition"});
  auto rec = run({"compute", "--n", "3", "--eta", "1,0,4", "--method", "recursion"});
  auto all = run({"compute", "--n", "3", "--eta", "1,0,4", "--method", "all"});
  CHECK(games.code == 0);
  CHECK(games.out == trans.out);
  CHECK(games.out == rec.out);
  CHECK(games.out == all.out);
  BarmonCache cache;
  CHECK(parse_mpoly(trimmed(games.out), 3) == barmon_transition(C("1,0,4"), cache));
}

TEST_CASE("game counting and listing") {
  CHECK(trimmed(run({"games", "count", "--n", "4", "--eta", "1,2,4,1"}).out) == "5");
  CHECK(trimmed(run({"games", "count", "--n", "3", "--eta", "1,0,4"}).out) == "6");
  CHECK(trimmed(run({"games", "count", "--n", "2", "--eta", "0,1"}).out) == "1");

  auto listed = run({"games", "list", "--n", "2", "--eta", "2,0"});
  CHECK(listed.code == 0);
  json j = json::parse(listed.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0][0].at("l") == 0);
  CHECK(!j[0][0].contains("j"));
  CHECK(j[1][0].at("j") == 2);

  auto dot = run({"games", "dot", "--n", "2", "--eta", "2,0"});
  CHECK(dot.out.find("digraph games") != std::string::npos);
  CHECK(dot.out.find("label=\"2,0\"") != std::string::npos);
}

TEST_CASE("per-game contributions through the CLI") {
  auto r = run({"games", "contrib", "--n", "2", "--eta", "3,0", "--at", "-1-r,-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sum: 0") != std::string::npos);
  CHECK(r.out.find("game 0: 0") != std::string::npos);
}

TEST_CASE("interp family output") {
  auto f = run({"interp", "F", "rdelta", "--n", "2", "--index", "0,2"});
  CHECK(f.code == 0);
  JackFamilies fam(2);
  CHECK(parse_mpoly(trimmed(f.out), 2) == fam.F_rdelta(C("0,2")));

  auto j = run({"interp", "J", "rdelta", "--n", "2", "--index", "2,0"});
  CHECK(parse_mpoly(trimmed(j.out), 2) == fam.J_rdelta(C("2,0")));

  auto e1 = run({"interp", "E", "rdelta", "--n", "1", "--index", "3"});
  CHECK(trimmed(e1.out) == "x1^3 - 3*x1^2 + 2*x1");

  // monic entries with denominators print as an exact quotient and reparse
  auto e2 = run({"interp", "E", "alpha", "--n", "2", "--index", "1,0"});
  CHECK(trimmed(e2.out) == "((r + 1)*x1 + r*x2) / (r + 1)");
  CHECK(parse_scaled_poly(trimmed(e2.out), 2) == fam.E_alpha(C("1,0")));

  auto bad = run({"interp", "J", "rdelta", "--n", "2", "--index", "0,2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("partition") != std::string::npos);
}

TEST_CASE("audits run and gate the exit code") {
  auto r = run({"audit", "cross", "--n", "2", "--max-norm", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result=pass") != std::string::npos);

  r = run({"audit", "theoremC", "--n", "2", "--max-norm", "0"});
  CHECK(r.code == 0);

  r = run({"audit", "cross", "--max-norm", "5", "--n", "3"});
  CHECK(r.code == 0);
  r = run({"audit", "vanishing", "--max-norm", "4", "--n", "2"});
  CHECK(r.code == 0);

  r = run({"audit", "vanishing", "--n", "2", "--max-norm", "3", "--format", "json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("suite") == "vanishing");
  CHECK(j.at("failures").empty());

  r = run({"audit", "all", "--n", "2", "--max-norm", "2"});
  CHECK(r.code == 0);
}

TEST_CASE("binomial values through the CLI") {
  auto raw = run({"binomial", "--n", "2", "--lambda", "3,1", "--mu", "3,4", "--family", "F",
                  "--raw"});
  CHECK(raw.code == 0);
  CHECK(trimmed(raw.out) == "48*r + 384 + 1044*r^-1 + 1272*r^-2 + 708*r^-3 + 144*r^-4");

  auto scaled = run({"binomial", "--n", "2", "--lambda", "1,0", "--mu", "1,0"});
  CHECK(trimmed(scaled.out) == "r");

  auto zero = run({"binomial", "--n", "2", "--lambda", "2,0", "--mu", "1,0"});
  CHECK(trimmed(zero.out) == "0");

  auto bad = run({"binomial", "--n", "2", "--lambda", "0,2", "--mu", "1,0"});
  CHECK(bad.code == 2);
}

TEST_CASE("poset export") {
  auto r = run({"poset", "--n", "2", "--max-norm", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"2,0\" -> \"1,0\"") != std::string::npos);
  CHECK(r.out.find("\"2,0\" -> \"0,1\"") != std::string::npos);
  CHECK(r.out.find("\"1,1\" -> \"0,1\"") != std::string::npos);
}

TEST_CASE("formats") {
  auto j = run({"compute", "--n", "2", "--eta", "2,0", "--format", "json"});
  CHECK(json::parse(j.out).at("n") == 2);
  auto l = run({"compute", "--n", "2", "--eta", "2,0", "--format", "latex"});
  CHECK(l.out.find("x_{1}^{2}") != std::string::npos);
  CHECK(l.out.find("r^{2}") != std::string::npos);
}

TEST_CASE("exit codes are a stable contract") {
  // 2: usage problems
  CHECK(run({"compute", "--eta", "2,0"}).code == 2);                        // missing --n
  CHECK(run({"compute", "--n", "2", "--eta", "2,x"}).code == 2);            // bad composition
  CHECK(run({"compute", "--n", "2", "--eta", "1,0,4"}).code == 2);          // wrong length
  CHECK(run({"nonsense", "--n", "2"}).code == 2);                           // unknown command
  CHECK(run({"compute", "--n", "2", "--eta", "2,0", "--method", "x"}).code == 2);
  // 1: guard trips
  auto guard = run({"games", "count", "--n", "3", "--eta", "1,0,4", "--guard", "2"});
  CHECK(guard.code == 1);
  CHECK(guard.err.find("guard") != std::string::npos);
  // 0: help
  CHECK(run({"--help"}).code == 0);
}

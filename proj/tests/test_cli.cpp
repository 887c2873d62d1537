#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace glpwb;
using namespace glpwb::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  std::string s = out.str();
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return {code, s, err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("cli examples") {
  CHECK(run({"ord", "log", "--xi", "w", "e[w](1)"}).out == "1");
  CHECK(run({"worm", "otype", "<w+1><w><w+1>T"}).out == "e[w](w+w)");
  CHECK(run({"rmap", "--theta", "2", "--lambda", "w", "e[w](1)"}).out == "w");
  CHECK(run({"ord", "exp", "--xi", "w", "2"}).out == render(eps(nat(1))));
  CHECK(run({"ord", "cmp", "e[w](1)", "w^w"}).out == "GT");
  CHECK(run({"simple", "ceil", "{0:e[w](1), w:w^2, w+1:2}"}).out == "e[w](w^2+w^2)");
  CHECK(run({"nindex", "--theta", "w", "--lambda", "w", "w^(e[w](3)*3)"}).out == "3");
  CHECK(run({"dprod", "--xi", "w^2", "--theta", "w+1", "bound"}).out == "w^3+w^2");
  CHECK(run({"dprod", "--xi", "w^2", "--theta", "w+1", "component", "w^3"}).out == "G1");
  CHECK(run({"topo", "rank", "--xi", "1", "w^w"}).out == "w");
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"ord", "eval", "w+"}).code == 2);
  CHECK(run({"ord", "sub", "3", "2"}).code == 1);
  CHECK(run({"dprod", "--xi", "w^2", "--theta", "w+1", "pi0", "w^3"}).code == 1);
  CHECK(run({"eval", "--theta", "w", "<0>p"}).code == 1);
  CHECK(run({"ord", "eval", "w+1"}).code == 0);
}

TEST_CASE("cli output round-trips through the parser") {
  const std::vector<std::vector<std::string>> cmds = {
      {"ord", "eval", "w*3+e[w^2](w)"},
      {"ord", "add", "e[w](w*3)", "e[w](w*2)"},
      {"ord", "mul", "1+w^2", "w"},
      {"ord", "fseq", "e[w](1)", "3"},
      {"ord", "exp", "--xi", "w+1", "w"},
      {"worm", "otype", "<2><0><1><w>T"},
  };
  for (const auto& c : cmds) {
    const Run r = run(c);
    REQUIRE(r.code == 0);
    CHECK(render(ord(r.out)) == r.out);
  }
}

TEST_CASE("cli json output") {
  const nlohmann::json a = run_json({"ord", "log", "--xi", "w", "e[w](1)"});
  CHECK(a["command"] == "ord log");
  CHECK(a["result"] == "1");
  const nlohmann::json r = run_json({"rmap", "--theta", "2", "--lambda", "w", "w^(e[w](1)+1)"});
  CHECK(r["result"]["value"] == "w+w+1");
  CHECK(r["result"]["trace"][0]["n"] == 2);
  const nlohmann::json e = run_json({"eval", "--theta", "w^w", "<1>T"});
  CHECK(e["result"]["witness"] == "w");
  CHECK(e["result"]["valid"] == false);
  CHECK(run_json({"ord", "eval", "w"}) == run_json({"ord", "eval", "w"}));
}

TEST_CASE("cli J commands") {
  const std::string path = "glpwb_cli_test_model.json";
  {
    std::ofstream m(path);
    m << R"({"worlds":["u","v","w"],"relations":[[["u","w"],["v","w"]]],"valuation":{"p":["u"]}})";
  }
  CHECK(run({"j", "validate", path}).out == "valid");
  CHECK(run({"j", "treelike", path}).out == "true");
  CHECK(run({"j", "check", "--model", path, "--world", "w", "<0>p"}).out == "true");
  CHECK(run({"j", "check", "--model", path, "--world", "u", "<0>T"}).out == "false");
  std::remove(path.c_str());
  const nlohmann::json s = run_json({"j", "sat", "--mplus", "--max-worlds", "4", "<1><0>T"});
  CHECK(s["result"]["status"] == "sat");
  CHECK(s["result"]["model"]["worlds"].size() <= 4);
  const nlohmann::json c = run_json({"j", "sat", "<w+1><w>T"});
  CHECK(c["result"]["index_map"] == nlohmann::json::array({"w", "w+1"}));
  const nlohmann::json u = run_json({"j", "sat", "--max-worlds", "3", "<0>T & [0]F"});
  CHECK(u["result"]["status"] == "unknown");
}

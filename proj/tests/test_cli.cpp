#include <doctest.h>

#include <sstream>

#include "quiverlin/cli.hpp"
#include "quiverlin/json_io.hpp"

using namespace quiverlin;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("word") {
  auto r = run({"word", "--quiver", "RLRL"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.rfind("2 1 4 3 2 1 5 4 3 2 1 5 4 3 5\n", 0) == 0);
  auto j = run({"word", "--quiver", "RLRL", "--json"});
  REQUIRE(j.code == kExitPass);
  auto parsed = Json::parse(j.out);
  CHECK(parsed["word"].size() == 15);
  CHECK(parsed["roots"].size() == 15);
}

TEST_CASE("maps and slices") {
  auto e = run({"emap", "--quiver", "RLRL"});
  CHECK(e.code == kExitPass);
  CHECK(e.out.find("c_1_1 = a_2 - a_1\n") != std::string::npos);
  auto d = run({"dmap", "--quiver", "RLRL", "--json"});
  CHECK(Json::parse(d.out)["a_2"]["c_1_1"] == 1);
  auto s = run({"slices", "--quiver", "RLRL", "--json"});
  CHECK(Json::parse(s.out)["1,1"] == 1);
  CHECK(Json::parse(s.out)["3,5"] == 4);
}

TEST_CASE("string and monomial") {
  auto s = run({"string", "--n", "2", "--word", "1,2,1", "--triangle", "0,1,0"});
  CHECK(s.code == kExitPass);
  auto m = run({"monomial", "--n", "2", "--word", "1,2,1", "--a", "0,0,5"});
  CHECK(m.code == kExitPass);
  CHECK(m.out.find("in string cone: no") != std::string::npos);
  auto j = run({"monomial", "--n", "2", "--word", "1,2,1", "--a", "0,1,1", "--json"});
  CHECK(Json::parse(j.out)["in_string_cone"] == true);
}

TEST_CASE("cones and render") {
  auto c = run({"cone", "lusztig", "--n", "2"});
  CHECK(c.code == kExitPass);
  CHECK(c.out.find(">=") != std::string::npos);
  auto svg = run({"render", "components", "--quiver", "RLRL", "--format", "svg"});
  CHECK(svg.code == kExitPass);
  CHECK(svg.out.rfind("<svg", 0) == 0);
  auto t = run({"render", "cone", "--quiver", "RL", "--cone", "cpbw"});
  CHECK(t.code == kExitPass);
}

TEST_CASE("verify exit codes") {
  auto ok = run({"verify", "coincide", "--n", "3", "--bound", "1"});
  CHECK(ok.code == kExitPass);
  CHECK(ok.out.find("PASS coincide") != std::string::npos);
  auto all = run({"verify", "all", "--quiver", "RL", "--bound", "1", "--json"});
  CHECK(all.code == kExitPass);
  CHECK(Json::parse(all.out).size() == 6);
  auto crystal = run({"verify", "crystal", "--n", "2", "--bound", "2"});
  CHECK(crystal.code == kExitPass);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"word"}).code == kExitUsage);
  CHECK(run({"word", "--quiver", "RXL"}).code == kExitUsage);
  CHECK(run({"word", "--n", "2", "--word", "1,1,2"}).code == kExitUsage);
  CHECK(run({"render", "slices", "--n", "3", "--format", "png"}).code == kExitUsage);
  CHECK(run({"verify", "bogus", "--n", "3"}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"word", "--quiver", "RL", "--n", "5"}).code == kExitUsage);
  CHECK(run({"monomial", "--n", "2", "--a", "1,2"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitPass);
}

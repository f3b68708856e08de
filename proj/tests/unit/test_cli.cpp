#include "gkm/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gkm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = invoke(args);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate") {
    const auto j = invoke_json({"validate", "fixtures:paper8"});
    CHECK(j["passed"] == true);
    CHECK(invoke({"validate", "--fixture", "paper8"}).code == 0);
    CHECK(invoke({"validate", "--require-spin", "fixtures:paper8"}).code == 1);
    CHECK(invoke({"validate", "fixtures:nothing"}).code == 2);
    CHECK(invoke({"validate"}).code == 2);
  }

  TEST_CASE("cohomology ranks and freeness") {
    const auto j = invoke_json({"cohomology", "fixtures:paper8", "--ring", "Z", "--max-degree", "8"});
    std::vector<int> ranks;
    for (const auto& d : j["degrees"]) ranks.push_back(d["rank"].get<int>());
    CHECK(ranks == std::vector<int>{1, 2, 5, 8, 12});
    const auto p = invoke_json({"cohomology", "fixtures:product(1,0;0,1;1,3)", "--ring", "Z3", "--degree", "2"});
    CHECK(p["degrees"][0]["rank"] == 6);
    CHECK(invoke({"cohomology", "fixtures:paper8", "--degree", "3"}).code == 2);
    CHECK(invoke({"cohomology", "fixtures:paper8", "--ring", "Z4"}).code == 2);
    CHECK(invoke({"cohomology", "fixtures:paper8", "--ring", "Zp", "--p", "4"}).code == 2);
  }

  TEST_CASE("characteristic classes") {
    const auto sw = invoke({"sw", "fixtures:paper8", "--degree", "2"});
    CHECK(sw.code == 0);
    CHECK(sw.out.find("x + y") != std::string::npos);
    CHECK(invoke({"spin", "fixtures:paper8"}).code == 0);
    const auto obs = invoke_json({"obstruction", "fixtures:paper8"});
    CHECK(obs["obstruction"]["verdict"] == "OBSTRUCTED");
    CHECK(obs["obstruction"]["failing_degree"] == 2);
    CHECK(invoke({"obstruction", "fixtures:paper8"}).code == 1);
    CHECK(invoke({"obstruction", "fixtures:product(1,0;0,1;1,2)"}).code == 0);
    CHECK(invoke({"obstruction", "fixtures:paper8", "--sign-override", "1:-", "--orientation-override", "5:rev"})
              .code == 1);
    CHECK(invoke({"obstruction", "fixtures:paper8", "--sign-override", "1:?"}).code == 2);
  }

  TEST_CASE("thom and relations") {
    CHECK(invoke({"thom", "fixtures:product(1,0;0,1;1,1)"}).code == 0);
    CHECK(invoke({"thom", "fixtures:paper8"}).code == 2);
    CHECK(invoke({"relations", "fixtures:paper8"}).code == 0);
  }

  TEST_CASE("output is deterministic") {
    for (const auto& cmd : {"validate", "cohomology", "sw", "spin", "obstruction", "relations"}) {
      const auto a = invoke({cmd, "fixtures:paper8", "--json"});
      const auto b = invoke({cmd, "fixtures:paper8", "--json"});
      CHECK(a.out == b.out);
      CHECK(nlohmann::json::accept(a.out));
    }
  }

  TEST_CASE("usage errors") {
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
  }
}

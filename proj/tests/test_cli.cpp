#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "implode/cli.hpp"

using namespace implode;
using cli::RunConfig;
using json_io::Json;

namespace {

cli::Outcome run(const std::string& cmd, const std::string& action, Json doc, std::optional<double> tol = {}) {
  RunConfig cfg;
  cfg.command = cmd;
  cfg.action = action;
  cfg.document = std::move(doc);
  cfg.tol = tol;
  return cli::dispatch(cfg);
}

Json c(double re, double im = 0.0) { return Json::array({re, im}); }

const std::filesystem::path kRoot = IMPLODE_SOURCE_DIR;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("closed-form flow document") {
    const auto out = run("contract", "flow", Json{{"B", Json::array({Json::array({c(2), c(0)}), Json::array({c(0), c(0.5)})})}});
    REQUIRE(out.status == 0);
    CHECK(out.document["result"][0][0][0].get<double>() == doctest::Approx(1.9364916));
    CHECK(out.document["result"][1][1][0].get<double>() == doctest::Approx(0.0));
  }

  TEST_CASE("root system and arrangement commands") {
    RunConfig cfg;
    cfg.command = "arrangement";
    cfg.action = "flats";
    cfg.family = "A";
    cfg.rank = 2;
    auto out = cli::dispatch(cfg);
    REQUIRE(out.status == 0);
    CHECK(out.document["count"] == 5);
    out = run("rootsys", "weyl", Json{{"family", "A"}, {"rank", 2}});
    CHECK(out.document["order"] == 6);
    // sigma is printed 1-based.
    CHECK(out.document["elements"][1]["sigma"].size() == 3);
    out = run("rootsys", "build", Json{{"family", "E"}, {"rank", 8}});
    CHECK(out.status == 2);
    CHECK(out.document["error"]["message"] == "unsupported root system");
  }

  TEST_CASE("exit codes") {
    CHECK(run("contract", "flow", Json{{"B", "nope"}}).status == 3);
    CHECK(run("contract", "flow", Json::object()).status == 3);
    CHECK(run("contract", "flow", Json{{"B", Json::array({Json::array({c(2), c(0)}), Json::array({c(0), c(2)})})}}).status == 2);
    CHECK(run("contract", "ghflow", Json{{"B", Json::array({Json::array({c(1), c(0)}), Json::array({c(0), c(1)})})}}).status == 4);
    CHECK(run("contract", "flow", Json{{"B", Json::array()}}, -1.0).status == 2);
    CHECK(run("nope", "x", Json::object()).status == 2);
    RunConfig cfg;
    cfg.command = "verify";
    cfg.action = "unknown";
    const auto out = cli::dispatch(cfg);
    CHECK(out.status == 2);
    CHECK(out.document["error"]["code"] == "unknown_suite");
  }

  TEST_CASE("mt chain keeps the dimension") {
    const Json chain{{"group", Json{{"sl", 2}}},
                     {"start", Json{{"label", "M"}, {"target", Json{{"sl", 2}}}, {"complex_dimension", 10}}},
                     {"steps", Json::array({"right_implosion", "left_implosion"})}};
    const auto out = run("mt", "compose", chain);
    REQUIRE(out.status == 0);
    CHECK(out.document["result"]["complex_dimension"] == 10);
    CHECK(out.document["dimension_preserved"] == true);
    CHECK(out.document["derivation"].size() == 3);
  }

  TEST_CASE("quiver and nahm round trips") {
    const Json rep{{"n", 2},
                   {"alphas", Json::array({Json::array({Json::array({c(1)}), Json::array({c(0)})})})},
                   {"betas", Json::array({Json::array({Json::array({c(0), c(1)})})})}};
    auto out = run("quiver", "nilpotent", rep);
    REQUIRE(out.status == 0);
    CHECK(out.document["nilpotent"] == true);
    out = run("nahm", "integrate",
              Json{{"initial", Json::array({Json::array({Json::array({c(0), c(0)}), Json::array({c(0), c(0)})}),
                                            Json::array({Json::array({c(0), c(0)}), Json::array({c(0), c(0)})}),
                                            Json::array({Json::array({c(0), c(0)}), Json::array({c(0), c(0)})}),
                                            Json::array({Json::array({c(0), c(0)}), Json::array({c(0), c(0)})})})},
                   {"t_start", 0.0},
                   {"t_end", 1.0},
                   {"steps", 16}});
    REQUIRE(out.status == 0);
    const auto data = out.document["data"];
    out = run("nahm", "residual", Json{{"data", data}});
    REQUIRE(out.status == 0);
    CHECK(out.document["residual"] == 0.0);
  }

  TEST_CASE("output is deterministic") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.action = "phi-separation";
    cfg.seed = 3;
    const auto a = cli::render(cli::dispatch(cfg).document);
    const auto b = cli::render(cli::dispatch(cfg).document);
    CHECK(a == b);
  }

  TEST_CASE("every action has a schema and an example document") {
    for (const auto& [cmd, actions] : cli::commands()) {
      const auto path = kRoot / "schemas" / (cmd + ".schema.json");
      CAPTURE(path.string());
      std::ifstream f(path);
      REQUIRE(f.good());
      const Json schema = Json::parse(f);
      if (cmd == "verify") continue;
      for (const auto& a : actions) {
        CAPTURE(a);
        CHECK(schema["actions"].contains(a));
      }
    }
  }

  TEST_CASE("sample inputs in data/ run cleanly") {
    for (const auto& entry : std::filesystem::directory_iterator(kRoot / "data")) {
      const std::string name = entry.path().stem().string();
      std::ifstream f(entry.path());
      const Json doc = Json::parse(f);
      if (!doc.contains("_command")) continue;
      CAPTURE(name);
      const auto cmd = doc["_command"].get<std::string>();
      const auto pos = cmd.find(' ');
      const auto out = run(cmd.substr(0, pos), cmd.substr(pos + 1), doc);
      CHECK(out.status == doc.value("_expect_status", 0));
    }
  }
}

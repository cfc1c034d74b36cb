#include <doctest.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lemlab/run.hpp"

using namespace lemlab;
using nlohmann::json;

namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) {
  return std::string(LEMLAB_TEST_DATA_DIR) + "/" + name;
}

// Scratch directory per call site, removed on scope exit.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path = fs::temp_directory_path() / ("lemlab-rr-" + tag + "-" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

RunConfig make_cfg(const std::string& command, const std::string& input, const fs::path& out,
                   std::uint64_t seed = 7) {
  RunConfig cfg;
  cfg.command = command;
  cfg.input_path = input;
  cfg.out_dir = out.string();
  cfg.seed = seed;
  cfg.seed_set = true;
  cfg.emit_artifacts = false;
  return cfg;
}

json tampered_copy(const std::string& report_path, const fs::path& dst,
                   const std::function<void(json&)>& mutate) {
  std::ifstream in(report_path);
  json rep;
  in >> rep;
  mutate(rep);
  std::ofstream out(dst);
  out << rep.dump(2) << "\n";
  return rep;
}

}  // namespace

TEST_CASE("a run writes the report it returns, plus its artifacts") {
  TempDir dir("cartan");
  RunConfig cfg = make_cfg("cartan", data("poly_quad.json"), dir.path);
  cfg.emit_artifacts = true;
  cfg.grid = 128;
  cfg.params["eps"] = 0.3;

  RunResult res = run(cfg);
  CHECK(res.exit_code == 0);
  CHECK(res.report.at("schema_version") == kSchemaVersion);
  CHECK(res.report.at("payload").at("pass").get<bool>());
  CHECK(res.report.at("payload").at("seed").get<std::uint64_t>() == 7);
  CHECK(res.report.at("config").at("command") == "cartan");

  CHECK(fs::path(res.report_path).filename() == "report-cartan.json");
  std::ifstream in(res.report_path);
  REQUIRE(in.good());
  json from_disk;
  in >> from_disk;
  CHECK(from_disk == res.report);

  const auto& artifacts = res.report.at("artifacts");
  REQUIRE(artifacts.size() == 2);
  for (const auto& a : artifacts) CHECK(fs::exists(a.get<std::string>()));
}

TEST_CASE("identical configs produce byte-identical payloads") {
  TempDir d1("rep1");
  TempDir d2("rep2");
  RunConfig c1 = make_cfg("cartan", data("poly_deg5.json"), d1.path, 11);
  c1.grid = 128;
  c1.params["eps"] = 0.25;
  RunConfig c2 = c1;
  c2.out_dir = d2.path.string();

  RunResult r1 = run(c1);
  RunResult r2 = run(c2);
  CHECK(r1.report.at("payload").dump() == r2.report.at("payload").dump());
}

TEST_CASE("every subcommand replays byte-identically") {
  struct Case {
    std::string command;
    std::string input;
    std::map<std::string, double> params;
    std::string check;
  };
  const std::vector<Case> cases = {
      {"cartan", "poly_deg5.json", {{"eps", 0.25}}, ""},
      {"minmod", "poly_deg5.json", {{"eta", 0.2}}, ""},
      {"log-lb", "poly_quad.json", {{"samples", 400}}, ""},
      {"lemniscate", "poly_quad.json", {{"eps", 0.2}, {"R", 1.5}}, ""},
      {"capacity", "disc.json", {}, ""},
      {"capcompare", "disc.json", {}, ""},
      {"green-lb", "green2.json", {{"samples", 400}}, ""},
      {"unit-lb", "green2.json", {{"samples", 400}}, ""},
      {"ball-lb", "green2.json", {{"samples", 400}}, ""},
      {"tc-min", "poly_quad.json", {{"samples", 600}}, ""},
      {"tc-max", "poly_quad.json", {{"samples", 600}}, ""},
      {"lelong-bound", "poly_quad.json", {}, ""},
      {"origin-lb", "poly_origin.json", {{"samples", 400}}, ""},
      {"essential-lb", "poly_quad.json", {{"eps", 0.1}, {"samples", 1024}}, ""},
      {"verify", "measure3.json", {}, "robin"},
  };

  for (const Case& c : cases) {
    CAPTURE(c.command);
    TempDir run_dir("battery-" + c.command);
    TempDir replay_dir("battery-replay-" + c.command);
    RunConfig cfg = make_cfg(c.command, data(c.input), run_dir.path, 31);
    cfg.grid = 128;
    cfg.check = c.check;
    for (const auto& [k, v] : c.params) cfg.params[k] = v;

    RunResult res = run(cfg);
    CHECK_MESSAGE(res.exit_code == 0, c.command, ": expected a passing run");

    RunResult rep = replay(res.report_path, replay_dir.path.string());
    CHECK(rep.exit_code == 0);
    CHECK(rep.report.at("match") == true);
    CHECK(rep.report.at("replay_of") == res.report_path);
    CHECK_MESSAGE(rep.report.at("payload").dump() == res.report.at("payload").dump(), c.command,
                  ": replay payload drifted");
    CHECK(fs::path(rep.report_path).filename() == "report-replay.json");
  }
}

TEST_CASE("replay rejects a tampered seed") {
  TempDir dir("tamper-seed");
  RunConfig cfg = make_cfg("cartan", data("poly_quad.json"), dir.path, 5);
  cfg.grid = 128;
  cfg.params["eps"] = 0.3;
  RunResult res = run(cfg);

  const fs::path tampered = dir.path / "tampered.json";
  tampered_copy(res.report_path, tampered, [](json& rep) {
    rep["config"]["seed"] = rep["config"]["seed"].get<std::uint64_t>() + 1;
  });
  CHECK_THROWS_WITH_AS(replay(tampered.string(), dir.path.string()),
                       "replay mismatch: payload differs from the recorded run", std::runtime_error);
}

TEST_CASE("replay refuses a foreign schema version") {
  TempDir dir("tamper-schema");
  RunConfig cfg = make_cfg("capacity", data("segment.json"), dir.path);
  RunResult res = run(cfg);

  const fs::path tampered = dir.path / "tampered.json";
  tampered_copy(res.report_path, tampered, [](json& rep) { rep["schema_version"] = "0.9"; });
  CHECK_THROWS_WITH_AS(replay(tampered.string(), dir.path.string()),
                       "replay refused: schema version mismatch", std::invalid_argument);
}

TEST_CASE("config json roundtrip preserves every field") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.input_path = "/tmp/in.json";
  cfg.check = "pj";
  cfg.seed = 987654321;
  cfg.seed_set = true;
  cfg.grid = 192;
  cfg.quad_nodes = 64;
  cfg.out_dir = "/tmp/out";
  cfg.params["r"] = 0.4;
  cfg.params["tol"] = 1e-7;

  RunConfig back = config_from_json(config_to_json(cfg));
  CHECK(back.command == cfg.command);
  CHECK(back.input_path == cfg.input_path);
  CHECK(back.check == cfg.check);
  CHECK(back.seed == cfg.seed);
  CHECK(back.seed_set);
  CHECK(back.grid == cfg.grid);
  CHECK(back.quad_nodes == cfg.quad_nodes);
  CHECK(back.out_dir == cfg.out_dir);
  CHECK(back.params == cfg.params);
}

TEST_CASE("run guards its contract") {
  TempDir dir("guards");

  RunConfig no_seed = make_cfg("cartan", data("poly_quad.json"), dir.path);
  no_seed.seed_set = false;
  no_seed.params["eps"] = 0.3;
  CHECK_THROWS_WITH_AS(run(no_seed), "seed is mandatory", std::invalid_argument);

  RunConfig bogus = make_cfg("frobnicate", data("poly_quad.json"), dir.path);
  CHECK_THROWS_WITH_AS(run(bogus), "unknown command: frobnicate", std::invalid_argument);

  RunConfig no_eps = make_cfg("cartan", data("poly_quad.json"), dir.path);
  CHECK_THROWS_WITH_AS(run(no_eps), "missing required parameter: eps", std::invalid_argument);

  RunConfig bad_check = make_cfg("verify", data("poly_quad.json"), dir.path);
  bad_check.check = "bogus";
  CHECK_THROWS_WITH_AS(run(bad_check), "unknown verify check: bogus", std::invalid_argument);

  RunConfig no_file = make_cfg("capacity", (dir.path / "missing.json").string(), dir.path);
  CHECK_THROWS_AS(run(no_file), std::invalid_argument);
}

TEST_CASE("a failed certificate exits 2 and still replays") {
  TempDir dir("robin-fail");
  TempDir replay_dir("robin-fail-replay");
  RunConfig cfg = make_cfg("verify", data("measure_mass08.json"), dir.path);
  cfg.check = "robin";

  RunResult res = run(cfg);
  CHECK(res.exit_code == 2);
  CHECK_FALSE(res.report.at("payload").at("pass").get<bool>());
  // Mass 0.8 leaves a deficit of 0.2 log R at the largest probe radius.
  const double value = res.report.at("payload").at("constants").at("value").get<double>();
  CHECK(value == doctest::Approx(-0.2 * std::log(1e4)).epsilon(1e-9));

  RunResult rep = replay(res.report_path, replay_dir.path.string());
  CHECK(rep.exit_code == 0);
  CHECK(rep.report.at("payload").dump() == res.report.at("payload").dump());
}

TEST_CASE("capcompare marks itself pass or inconclusive, never both") {
  TempDir dir("capcompare");
  RunConfig cfg = make_cfg("capcompare", data("cloud.json"), dir.path);
  RunResult res = run(cfg);
  const json& payload = res.report.at("payload");
  CHECK(payload.contains("pass") != payload.contains("inconclusive"));
  CHECK((res.exit_code == 0 || res.exit_code == 2));
}

// Command-line front end over the run harnesses. Every compute subcommand
// shares the same contract: --input (JSON), --seed (mandatory), --out,
// optional --grid/--quad-nodes, plus per-command math parameters. Exit code
// 0 means pass or inconclusive, 2 means a certified bound failed, 1 means
// the run itself errored.
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lemlab/run.hpp"

namespace {

struct ParamDoc {
  const char* name;
  const char* help;
};

struct CmdDoc {
  const char* name;
  const char* help;
  std::vector<ParamDoc> params;
};

const std::vector<CmdDoc>& command_table() {
  static const std::vector<CmdDoc> table = {
      {"cartan",
       "cover the small-lemniscate set of a polynomial by discs with a radius-power budget",
       {{"eps", "exclusion scale (required)"},
        {"alpha", "radius power in (0,2], default 1"},
        {"extent", "half-width of the verification grid"}}},
      {"minmod",
       "certified lower bound for log|f| off a small disc family",
       {{"eta", "relative disc budget (required)"}, {"R", "reference radius, default 1"}}},
      {"log-lb",
       "minimum principle for a normalized logarithmic potential on B_R",
       {{"eta", "exclusion budget, default 0.5"},
        {"alpha", "content power, default 1"},
        {"R", "sample ball radius, default 5"},
        {"samples", "sample count, default 2000"},
        {"tol", "violation slack"}}},
      {"lemniscate",
       "Hausdorff-content bound for the sublevel set {V <= log eps}",
       {{"eps", "sublevel threshold in (0,1/e) (required)"},
        {"alpha", "content power, default 1"},
        {"R", "grid half-width, default 1"}}},
      {"capacity",
       "logarithmic capacity of a disc, segment, or point cloud",
       {{"k", "Fekete subset size for clouds, default 64"}}},
      {"capcompare",
       "compare a content upper bound against the capacity-based bound",
       {{"alpha", "content power, default 1"}, {"k", "Fekete subset size, default 64"}}},
      {"green-lb",
       "minimum principle for a Green potential on the unit ball",
       {{"eta", "exclusion budget, default 0.3"},
        {"alpha", "content power, default 1"},
        {"s", "mass truncation radius, default 0.5"},
        {"samples", "sample count, default 1500"},
        {"sample_radius", "Euclidean sampling radius, default 0.9"},
        {"tol", "violation slack"}}},
      {"unit-lb",
       "unit-mass specialization of the Green potential minimum principle",
       {{"eta", "exclusion budget, default 0.3"},
        {"alpha", "content power, default 1"},
        {"samples", "sample count, default 1500"},
        {"sample_radius", "Euclidean sampling radius, default 0.9"},
        {"tol", "violation slack"}}},
      {"ball-lb",
       "decomposition harness for nonpositive psh functions on the unit ball",
       {{"rho", "inner ball radius, default 0.5"},
        {"s", "mass truncation radius, default 0.5"},
        {"eta", "exclusion budget, default 0.3"},
        {"alpha", "content power, default 1"},
        {"samples", "sample count, default 1500"},
        {"tol", "violation slack, default 1e-2"}}},
      {"tc-min",
       "three-circle minimum principle with exclusion balls, scaled to B_R",
       {{"sigma", "inner radius fraction, default 0.1"},
        {"tau", "middle radius fraction, default 0.5"},
        {"nu", "override exponent (0 selects the certified one)"},
        {"eta", "exclusion budget, default 0.3"},
        {"alpha", "content power, default 1"},
        {"R", "outer radius, default 1"},
        {"samples", "sample count, default 2000"},
        {"tol", "violation slack, default 1e-6"}}},
      {"tc-max",
       "three-circle maximum interpolation check on sampled points",
       {{"sigma", "inner radius fraction, default 0.1"},
        {"tau", "middle radius fraction, default 0.5"},
        {"R", "outer radius, default 1"},
        {"samples", "sample count, default 2000"},
        {"tol", "interpolation slack, default 1e-9"}}},
      {"lelong-bound",
       "check the pole-density cap implied by the three-circle exponent",
       {{"sigma", "inner radius fraction, default 0.1"},
        {"tau", "middle radius fraction, default 0.5"},
        {"R", "outer radius, default 1"},
        {"zre", "probe point, real part"},
        {"zim", "probe point, imaginary part"},
        {"slack", "allowed excess over the exponent, default 0.05"}}},
      {"origin-lb",
       "minimum principle normalized at the origin (V(0) = 0) on B_R",
       {{"R", "outer radius, default 1"},
        {"eta", "exclusion budget, default 0.3"},
        {"alpha", "content power, default 1"},
        {"samples", "sample count, default 1500"},
        {"tol", "violation slack, default 1e-6"}}},
      {"essential-lb",
       "essential lower bound after removing a content-eps exceptional set",
       {{"eps", "content budget (required)"},
        {"alpha", "content power, default 1"},
        {"R", "sample ball radius"},
        {"samples", "sample count, default 2048"}}},
      {"verify",
       "residual identities: --check pj | representation | jensen | robin | lelong",
       {{"r", "inner radius for pj, default 0.5"},
        {"R", "outer radius, default per check"},
        {"zre", "probe point, real part"},
        {"zim", "probe point, imaginary part"},
        {"tol", "residual tolerance, default per check"}}},
  };
  return table;
}

struct CmdState {
  lemlab::RunConfig cfg;
  CLI::App* sub = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lemlab: certified covers and minimum principles for logarithmic potentials"};
  app.require_subcommand(1);

  std::vector<std::shared_ptr<CmdState>> states;
  for (const CmdDoc& doc : command_table()) {
    auto st = std::make_shared<CmdState>();
    st->cfg.command = doc.name;
    CLI::App* sub = app.add_subcommand(doc.name, doc.help);
    st->sub = sub;
    sub->add_option("--input,-i", st->cfg.input_path, "input description JSON")->required();
    sub->add_option("--out,-o", st->cfg.out_dir, "output directory, default .");
    sub->add_option_function<std::uint64_t>(
        "--seed", [st](std::uint64_t v) { st->cfg.seed = v; st->cfg.seed_set = true; },
        "RNG seed (mandatory: runs never draw their own entropy)");
    sub->add_option("--grid", st->cfg.grid, "verification grid resolution per axis, default 256");
    sub->add_option("--quad-nodes", st->cfg.quad_nodes,
                    "sphere quadrature node count, 0 = per-dimension default");
    sub->add_flag_function(
        "--no-artifacts", [st](std::int64_t) { st->cfg.emit_artifacts = false; },
        "skip CSV/SVG artifact emission");
    if (st->cfg.command == "verify") {
      sub->add_option("--check", st->cfg.check, "pj | representation | jensen | robin | lelong")
          ->required();
    }
    for (const ParamDoc& p : doc.params) {
      std::string key = p.name;
      sub->add_option_function<double>(
          "--" + key, [st, key](double v) { st->cfg.params[key] = v; }, p.help);
    }
    states.push_back(st);
  }

  std::string replay_report;
  std::string replay_out = ".";
  CLI::App* replay_sub =
      app.add_subcommand("replay", "re-execute a recorded report and demand a byte-identical payload");
  replay_sub->add_option("--report", replay_report, "path to a previously written report JSON")
      ->required();
  replay_sub->add_option("--out,-o", replay_out, "output directory, default .");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    lemlab::RunResult res;
    if (replay_sub->parsed()) {
      res = lemlab::replay(replay_report, replay_out);
      std::cout << "replay: MATCH  report=" << res.report_path << "\n";
      return res.exit_code;
    }
    for (const auto& st : states) {
      if (!st->sub->parsed()) continue;
      res = lemlab::run(st->cfg);
      const auto& payload = res.report["payload"];
      std::string status = payload.contains("inconclusive") ? "INCONCLUSIVE"
                           : payload.value("pass", false)   ? "PASS"
                                                            : "FAIL";
      std::cout << st->cfg.command << ": " << status;
      const double cs = payload.value("content_sum", 0.0);
      const double pb = payload.value("paper_bound", 0.0);
      if (pb != 0.0 || cs != 0.0) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "  content_sum=%.6g bound=%.6g", cs, pb);
        std::cout << buf;
      }
      std::cout << "  report=" << res.report_path << "\n";
      return res.exit_code;
    }
    std::cerr << "error: no subcommand selected\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

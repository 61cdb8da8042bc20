#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "msdiff/config.hpp"
#include "msdiff/errors.hpp"
#include "msdiff/output.hpp"
#include "msdiff/simulation.hpp"

using namespace msdiff;
namespace fs = std::filesystem;

namespace {

SimConfig short_config(Model model, double t_end = 0.04) {
  auto cfg = preset_config("duncan-toor");
  cfg.model = model;
  cfg.t_end = t_end;
  cfg.snapshot_times = {0.0, 0.005, 0.0362, t_end};
  return cfg;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("msdiff_test_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("landing_step") {
  CHECK(landing_step(0.0362, 2e-4) == std::optional<std::size_t>(181));
  CHECK(landing_step(2.0, 2e-4) == std::optional<std::size_t>(10000));
  CHECK_FALSE(landing_step(0.0362, 3e-4).has_value());
}

TEST_CASE("constant-state run") {
  auto cfg = short_config(Model::kHoms);
  cfg.initial_condition = InitialCondition::uniform(std::vector<double>{0.4, 0.2, 0.4}, 0.0, 1.0);
  const auto rep = run(cfg);
  REQUIRE(rep.complete);
  for (const auto& snap : rep.snapshots) {
    CHECK(snap.state.n == rep.snapshots.front().state.n);
    CHECK(snap.state.deviator == rep.snapshots.front().state.deviator);
  }
}

TEST_CASE("snapshot times are exact") {
  const auto rep = run(short_config(Model::kMs));
  REQUIRE(rep.snapshots.size() == 4);
  CHECK(rep.snapshots[2].time == 0.0362);
  CHECK(rep.snapshots[2].state.time == 0.0362);
  CHECK(rep.trace.size() == 4);
  CHECK(rep.cfl.flagged);
  CHECK_FALSE(rep.warnings.empty());
  CHECK(rep.equilibrium[0] == doctest::Approx(0.4));
}

TEST_CASE("long MS run approaches equilibrium") {
  auto cfg = preset_config("duncan-toor");
  cfg.model = Model::kMs;
  cfg.snapshot_times = {0.0, 2.0};
  const auto rep = run(cfg);
  REQUIRE(rep.complete);
  for (const auto& d : rep.trace.back().equilibrium) CHECK(d.linf <= 1e-3);
}

TEST_CASE("strict CFL aborts") {
  auto cfg = short_config(Model::kMs);
  cfg.strict_cfl = true;
  CHECK_THROWS_AS(run(cfg), StabilityError);
}

TEST_CASE("positivity failure yields an incomplete report") {
  auto cfg = short_config(Model::kMs);
  cfg.dt = 2e-3;
  cfg.t_end = 0.2;
  cfg.snapshot_times = {0.0, 0.1, 0.2};
  const auto rep = run(cfg);
  CHECK_FALSE(rep.complete);
  CHECK(rep.error_code == 5);
  CHECK_FALSE(rep.error.empty());

  const auto dir = scratch("incomplete");
  write_run(rep, dir);
  CHECK(fs::exists(dir / "INCOMPLETE"));
  CHECK(slurp(dir / "summary.json").find("\"incomplete\"") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("output files") {
  const auto rep = run(short_config(Model::kHoms));
  const auto nodes = nodes_csv(rep);
  const auto fluxes = fluxes_csv(rep);
  CHECK(nodes.rfind("t,x,species,n,P,p_total\n", 0) == 0);
  CHECK(fluxes.rfind("t,x_half,species,J\n", 0) == 0);
  // header + 4 snapshots x 3 species x 21 nodes
  CHECK(std::count(nodes.begin(), nodes.end(), '\n') == 1 + 4 * 3 * 21);
  CHECK(std::count(fluxes.begin(), fluxes.end(), '\n') == 1 + 4 * 3 * 20);
  CHECK(nodes.find("\n" + format_value(0.0362) + ",") != std::string::npos);
  CHECK(format_value(0.1) == "0.10000000000000001");

  SUBCASE("determinism") {
    const auto a = scratch("det_a");
    const auto b = scratch("det_b");
    write_run(run(short_config(Model::kHoms)), a);
    write_run(run(short_config(Model::kHoms)), b);
    for (const char* f : {"nodes.csv", "fluxes.csv", "summary.json"}) {
      CHECK(slurp(a / f) == slurp(b / f));
    }
    CHECK_FALSE(fs::exists(a / "INCOMPLETE"));
    fs::remove_all(a);
    fs::remove_all(b);
  }
}

TEST_CASE("compare and sweep") {
  const auto cfg = short_config(Model::kHoms);
  const auto cmp = compare(cfg);
  CHECK(cmp.per_snapshot.size() == 4);
  CHECK(cmp.ms.model == Model::kMs);
  CHECK(cmp.homs.model == Model::kHoms);

  const auto sweep = sweep_gamma(cfg, {0.1, 0.2, 0.3});
  REQUIRE(sweep.entries.size() == 3);
  CHECK(sweep.monotone);
  CHECK(sweep.entries[0].gap.difference.max_n_linf() >
        sweep.entries[2].gap.difference.max_n_linf());

  const auto third = sweep_gamma(cfg, {1.0 / 3.0});
  CHECK(third.entries[0].gap.difference.max_n_linf() <= 1e-12);

  const auto toggled = sweep_gamma(cfg, {0.1}, true);
  REQUIRE(toggled.entries.size() == 2);
  CHECK(toggled.entries[0].neglect_self_diffusion != toggled.entries[1].neglect_self_diffusion);
  const auto d = compare_runs(toggled.entries[0].homs, toggled.entries[1].homs, cfg.t_end);
  CHECK(d.difference.max_n_linf() <= 1e-3);

  const auto dir = scratch("sweep");
  write_sweep(sweep, dir);
  CHECK(fs::exists(dir / "sweep.csv"));
  CHECK(fs::exists(dir / "ms" / "nodes.csv"));
  fs::remove_all(dir);
}

TEST_CASE("params table") {
  const auto text = format_params(preset_config("duncan-toor"));
  for (const char* v : {"0.0810811", "1.48662", "0.299822", "2.35784", "6.54304", "0.523443"}) {
    CHECK_MESSAGE(text.find(v) != std::string::npos, v);
  }
}

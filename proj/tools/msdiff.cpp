// Command-line driver: run, compare, sweep-gamma, params.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "msdiff/config.hpp"
#include "msdiff/errors.hpp"
#include "msdiff/output.hpp"
#include "msdiff/simulation.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string preset;
  std::string out_dir;
  bool strict_cfl = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON configuration file");
  cmd->add_option("--preset", opts.preset, "Built-in setup (duncan-toor)");
  cmd->add_option("--out", opts.out_dir, "Output directory (overrides output_dir)");
  cmd->add_flag("--strict-cfl", opts.strict_cfl, "Abort when the CFL number exceeds 0.5");
}

msdiff::SimConfig resolve(const CommonOptions& opts) {
  msdiff::SimConfig cfg;
  if (!opts.config_path.empty()) {
    cfg = msdiff::load_config(opts.config_path);
  } else if (!opts.preset.empty()) {
    cfg = msdiff::preset_config(opts.preset);
  } else {
    throw msdiff::ConfigError("one of --config or --preset is required");
  }
  if (!opts.out_dir.empty()) cfg.output_dir = opts.out_dir;
  if (opts.strict_cfl) cfg.strict_cfl = true;
  return cfg;
}

void print_warnings(const msdiff::RunReport& r) {
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
}

int report_status(const msdiff::RunReport& r) {
  if (r.complete) return 0;
  std::cerr << "error: " << to_string(r.model) << " run incomplete: " << r.error << "\n";
  return r.error_code;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(',', start);
    const auto item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!item.empty()) {
      try {
        out.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw msdiff::ConfigError("--gammas: cannot parse '" + item + "'");
      }
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multicomponent Maxwell-Stefan / higher-order Maxwell-Stefan diffusion in 1D"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  std::string model;
  auto* run_cmd = app.add_subcommand("run", "Integrate one model and write snapshots");
  add_common(run_cmd, run_opts);
  run_cmd->add_option("--model", model, "Override the configured model")
      ->check(CLI::IsMember({"ms", "homs"}));

  CommonOptions cmp_opts;
  auto* cmp_cmd = app.add_subcommand("compare", "Run MS and HOMS on the same setup");
  add_common(cmp_cmd, cmp_opts);

  CommonOptions sweep_opts;
  std::string gammas;
  bool toggle_self = false;
  auto* sweep_cmd = app.add_subcommand("sweep-gamma", "HOMS runs over gamma against an MS baseline");
  add_common(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--gammas", gammas, "Comma-separated gamma values");
  sweep_cmd->add_flag("--toggle-self-diffusion", toggle_self,
                      "Also run each gamma with the opposite self-diffusion setting");

  CommonOptions params_opts;
  auto* params_cmd = app.add_subcommand("params", "Print the dimensionless parameter table");
  add_common(params_cmd, params_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      auto cfg = resolve(run_opts);
      if (model == "ms") cfg.model = msdiff::Model::kMs;
      if (model == "homs") cfg.model = msdiff::Model::kHoms;
      const auto report = msdiff::run(cfg);
      print_warnings(report);
      msdiff::write_run(report, cfg.output_dir);
      const auto& last = report.trace.back();
      std::cout << fmt::format("{} run {} to t = {}; {} snapshots written to {}\n",
                               to_string(report.model), report.complete ? "completed" : "stopped",
                               last.time, report.snapshots.size(), cfg.output_dir);
      return report_status(report);
    }
    if (*cmp_cmd) {
      const auto cfg = resolve(cmp_opts);
      const auto report = msdiff::compare(cfg);
      print_warnings(report.ms);
      msdiff::write_compare(report, cfg.output_dir);
      std::cout << fmt::format("{:>10} {:>14}", "t", "max|n gap|");
      for (const auto& name : report.ms.spec.species_names) {
        std::cout << fmt::format(" {:>12} {:>12}", "dist_ms(" + name + ")", "dist_homs(" + name + ")");
      }
      std::cout << "\n";
      for (std::size_t k = 0; k < report.per_snapshot.size(); ++k) {
        std::cout << fmt::format("{:>10.6g} {:>14.6g}", report.per_snapshot[k].time,
                                 report.per_snapshot[k].difference.max_n_linf());
        for (std::size_t i = 0; i < report.ms.spec.species_count(); ++i) {
          std::cout << fmt::format(" {:>12.6g} {:>12.6g}", report.ms.trace[k].equilibrium[i].linf,
                                   report.homs.trace[k].equilibrium[i].linf);
        }
        std::cout << "\n";
      }
      const int ms_status = report_status(report.ms);
      const int homs_status = report_status(report.homs);
      return ms_status != 0 ? ms_status : homs_status;
    }
    if (*sweep_cmd) {
      const auto cfg = resolve(sweep_opts);
      auto list = gammas.empty() ? cfg.gamma_list : parse_list(gammas);
      if (list.empty()) throw msdiff::ConfigError("sweep-gamma: no gamma values given");
      const auto report = msdiff::sweep_gamma(cfg, list, toggle_self);
      print_warnings(report.baseline);
      msdiff::write_sweep(report, cfg.output_dir);
      std::cout << fmt::format("{:>10} {:>8} {:>10} {:>16}\n", "gamma", "no-self", "t", "max|n gap|");
      int status = report_status(report.baseline);
      for (const auto& e : report.entries) {
        std::cout << fmt::format("{:>10.6g} {:>8} {:>10.6g} {:>16.6g}\n", e.gamma,
                                 e.neglect_self_diffusion ? "yes" : "no", e.gap.time,
                                 e.gap.difference.max_n_linf());
        if (status == 0) status = report_status(e.homs);
      }
      std::cout << "gap decreasing in gamma: " << (report.monotone ? "yes" : "no") << "\n";
      return status;
    }
    if (*params_cmd) {
      const auto cfg = resolve(params_opts);
      std::cout << msdiff::format_params(cfg);
      return 0;
    }
  } catch (const msdiff::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "msdiff/output.hpp"

#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "msdiff/errors.hpp"

namespace msdiff {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("output: cannot write " + path.string());
  out << content;
}

json norms_json(const std::vector<NormPair>& v) {
  json linf = json::array();
  json l2 = json::array();
  for (const auto& p : v) {
    linf.push_back(p.linf);
    l2.push_back(p.l2);
  }
  return {{"linf", linf}, {"l2", l2}};
}

json matrix_json(const DenseMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

json difference_json(const FieldDifference& d) {
  return {{"n", norms_json(d.n)}, {"J", norms_json(d.flux)}, {"p_total", norms_json(d.p_total)}};
}

std::string gamma_label(double g) { return fmt::format("{:.6g}", g); }

}  // namespace

std::string format_value(double v) { return fmt::format("{:.17g}", v); }

std::string nodes_csv(const RunReport& report) {
  std::string out = "t,x,species,n,P,p_total\n";
  const double kt = report.spec.kappa_t();
  for (const auto& snap : report.snapshots) {
    for (std::size_t i = 0; i < snap.state.n.species(); ++i) {
      for (std::size_t l = 0; l < report.grid.node_count(); ++l) {
        const double n = snap.state.n(i, l);
        const double p = snap.state.deviator(i, l);
        out += fmt::format("{},{},{},{},{},{}\n", format_value(snap.time),
                           format_value(report.grid.nodes[l]), report.spec.species_names[i],
                           format_value(n), format_value(p), format_value(kt * n + kt * p));
      }
    }
  }
  return out;
}

std::string fluxes_csv(const RunReport& report) {
  std::string out = "t,x_half,species,J\n";
  for (const auto& snap : report.snapshots) {
    for (std::size_t i = 0; i < snap.state.flux.species(); ++i) {
      for (std::size_t l = 0; l < report.grid.half_count(); ++l) {
        out += fmt::format("{},{},{},{}\n", format_value(snap.time),
                           format_value(report.grid.half_nodes[l]),
                           report.spec.species_names[i], format_value(snap.state.flux(i, l)));
      }
    }
  }
  return out;
}

std::string summary_json(const RunReport& report) {
  json trace = json::array();
  for (const auto& rec : report.trace) {
    json eq = norms_json(rec.equilibrium);
    trace.push_back({{"time", rec.time},
                     {"species_mass", rec.species_mass},
                     {"closure_error", rec.closure_error},
                     {"equilibrium_linf", eq["linf"]},
                     {"equilibrium_l2", eq["l2"]},
                     {"deviator_residual", rec.deviator_residual},
                     {"deviator_sum_gradient", rec.deviator_sum_gradient},
                     {"cfl", rec.cfl}});
  }
  const auto& spec = report.spec;
  json doc = {
      {"model", to_string(report.model)},
      {"status", report.complete ? "complete" : "incomplete"},
      {"error", report.error},
      {"error_code", report.error_code},
      {"dt", report.dt},
      {"grid",
       {{"x_min", report.grid.x_min},
        {"x_max", report.grid.x_max},
        {"dx", report.grid.dx},
        {"intervals", report.grid.intervals}}},
      {"cfl", {{"value", report.cfl.value}, {"flagged", report.cfl.flagged}}},
      {"warnings", report.warnings},
      {"parameters",
       {{"species", spec.species_names},
        {"masses", spec.masses},
        {"diffusivities", matrix_json(spec.diffusivities)},
        {"cross_section_norms", matrix_json(spec.cross_section_norms)},
        {"gamma", matrix_json(spec.gamma)},
        {"kappa", spec.kappa},
        {"temperature", spec.temperature},
        {"n_ref", spec.n_ref},
        {"neglect_self_diffusion", spec.neglect_self_diffusion}}},
      {"initial_mass", report.initial_mass},
      {"equilibrium", report.equilibrium},
      {"trace", trace},
  };
  return doc.dump(2) + "\n";
}

void write_run(const RunReport& report, const fs::path& dir) {
  fs::create_directories(dir);
  write_file(dir / "nodes.csv", nodes_csv(report));
  write_file(dir / "fluxes.csv", fluxes_csv(report));
  write_file(dir / "summary.json", summary_json(report));
  const auto marker = dir / "INCOMPLETE";
  if (report.complete) {
    fs::remove(marker);
  } else {
    write_file(marker, report.error + "\n");
  }
}

void write_compare(const CompareReport& report, const fs::path& dir) {
  fs::create_directories(dir);
  write_run(report.ms, dir / "ms");
  write_run(report.homs, dir / "homs");

  std::string csv = "t,x,species,n_ms,n_homs,p_total_ms,p_total_homs\n";
  const std::size_t common = report.per_snapshot.size();
  const double kt_ms = report.ms.spec.kappa_t();
  const double kt_homs = report.homs.spec.kappa_t();
  for (std::size_t k = 0; k < common; ++k) {
    const auto& a = report.ms.snapshots[k].state;
    const auto& b = report.homs.snapshots[k].state;
    for (std::size_t i = 0; i < a.n.species(); ++i) {
      for (std::size_t l = 0; l < a.n.points(); ++l) {
        csv += fmt::format("{},{},{},{},{},{},{}\n", format_value(report.ms.snapshots[k].time),
                           format_value(report.ms.grid.nodes[l]), report.ms.spec.species_names[i],
                           format_value(a.n(i, l)), format_value(b.n(i, l)),
                           format_value(kt_ms * a.n(i, l) + kt_ms * a.deviator(i, l)),
                           format_value(kt_homs * b.n(i, l) + kt_homs * b.deviator(i, l)));
      }
    }
  }
  write_file(dir / "compare.csv", csv);

  json snaps = json::array();
  for (std::size_t k = 0; k < common; ++k) {
    const auto& cmp = report.per_snapshot[k];
    snaps.push_back({{"time", cmp.time},
                     {"difference", difference_json(cmp.difference)},
                     {"equilibrium_ms", norms_json(report.ms.trace[k].equilibrium)},
                     {"equilibrium_homs", norms_json(report.homs.trace[k].equilibrium)}});
  }
  json doc = {{"ms_status", report.ms.complete ? "complete" : "incomplete"},
              {"homs_status", report.homs.complete ? "complete" : "incomplete"},
              {"snapshots", snaps}};
  write_file(dir / "comparison.json", doc.dump(2) + "\n");
}

void write_sweep(const SweepReport& report, const fs::path& dir) {
  fs::create_directories(dir);
  write_run(report.baseline, dir / "ms");
  std::string csv =
      "gamma,neglect_self_diffusion,t,species,n_linf,n_l2,J_linf,J_l2,p_total_linf,p_total_l2\n";
  json entries = json::array();
  for (const auto& e : report.entries) {
    const auto sub = fmt::format("homs_gamma_{}{}", gamma_label(e.gamma),
                                 e.neglect_self_diffusion ? "_noself" : "");
    write_run(e.homs, dir / sub);
    const auto& d = e.gap.difference;
    for (std::size_t i = 0; i < d.n.size(); ++i) {
      csv += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", format_value(e.gamma),
                         e.neglect_self_diffusion ? 1 : 0, format_value(e.gap.time),
                         report.baseline.spec.species_names[i], format_value(d.n[i].linf),
                         format_value(d.n[i].l2), format_value(d.flux[i].linf),
                         format_value(d.flux[i].l2), format_value(d.p_total[i].linf),
                         format_value(d.p_total[i].l2));
    }
    entries.push_back({{"gamma", e.gamma},
                       {"neglect_self_diffusion", e.neglect_self_diffusion},
                       {"status", e.homs.complete ? "complete" : "incomplete"},
                       {"time", e.gap.time},
                       {"max_n_linf_gap", d.max_n_linf()},
                       {"difference", difference_json(d)}});
  }
  write_file(dir / "sweep.csv", csv);
  json doc = {{"monotone", report.monotone}, {"entries", entries}};
  write_file(dir / "sweep.json", doc.dump(2) + "\n");
}

}  // namespace msdiff

#include "msdiff/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "msdiff/errors.hpp"

namespace msdiff {

std::string to_string(Model model) { return model == Model::kMs ? "ms" : "homs"; }

std::optional<std::size_t> landing_step(double t, double dt) {
  if (!(dt > 0.0) || !(t >= 0.0)) return std::nullopt;
  const double k = std::round(t / dt);
  if (std::abs(k * dt - t) > 1e-9 * std::max(t, dt)) return std::nullopt;
  return static_cast<std::size_t>(k);
}

MixtureSpec SimConfig::mixture_spec() const {
  MixtureSpec spec = nondimensionalize(mixture);
  if (gamma_override) spec = spec.with_gamma(*gamma_override);
  spec.neglect_self_diffusion = neglect_self_diffusion;
  return spec;
}

GridSpec SimConfig::grid() const { return build_grid(x_min, x_max, dx); }

std::size_t SimConfig::step_count() const {
  const auto k = landing_step(t_end, dt);
  if (!k) {
    throw ConfigError(fmt::format("t_end = {} is not a multiple of dt = {}", t_end, dt));
  }
  return *k;
}

void SimConfig::validate() const {
  if (!(dt > 0.0)) throw ConfigError("dt must be positive");
  if (!(t_end > 0.0)) throw ConfigError("t_end must be positive");
  if (!(singular_tol > 0.0)) throw ConfigError("singular_tol must be positive");
  if (!(positivity_tol >= 0.0)) throw ConfigError("positivity_tol must be nonnegative");
  step_count();
  for (std::size_t k = 0; k < snapshot_times.size(); ++k) {
    const double t = snapshot_times[k];
    if (!(t >= 0.0) || t > t_end) {
      throw ConfigError(fmt::format("snapshot_times[{}] = {} outside [0, t_end]", k, t));
    }
    if (k > 0 && !(t > snapshot_times[k - 1])) {
      throw ConfigError(fmt::format("snapshot_times[{}] not strictly increasing", k));
    }
    if (!landing_step(t, dt)) {
      throw ConfigError(
          fmt::format("snapshot_times[{}] = {} does not land on a step of dt = {}", k, t, dt));
    }
  }
  if (gamma_override && gamma_override->size() != mixture.species_count()) {
    throw ConfigError("gamma_override: dimension does not match species count");
  }
  mixture.validate();
  grid();
}

const Snapshot& RunReport::snapshot_near(double t) const {
  if (snapshots.empty()) throw ComparisonError("run has no snapshots");
  const Snapshot* best = &snapshots.front();
  for (const auto& s : snapshots) {
    if (s.time == t) return s;
    if (std::abs(s.time - t) < std::abs(best->time - t)) best = &s;
  }
  return *best;
}

namespace {

double closure_error(const SpeciesField& n, double n_ref) {
  double worst = 0.0;
  for (std::size_t l = 0; l < n.points(); ++l) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n.species(); ++i) sum += n(i, l);
    worst = std::max(worst, std::abs(sum - n_ref));
  }
  return worst;
}

DiagnosticRecord diagnose(const RunReport& report, const MixtureState& state,
                          double time) {
  DiagnosticRecord rec;
  rec.time = time;
  rec.species_mass = total_mass(state.n, report.grid);
  rec.closure_error = closure_error(state.n, report.spec.n_ref);
  rec.equilibrium = equilibrium_distance(state.n, report.equilibrium, report.grid);
  if (report.model == Model::kHoms) {
    rec.deviator_residual = deviator_residual(state, report.spec);
    rec.deviator_sum_gradient = deviator_sum_gradient(state, report.grid);
  }
  rec.cfl = report.cfl.value;
  return rec;
}

NormPair difference_norm(std::span<const double> a, std::span<const double> b,
                         std::span<const double> weights) {
  NormPair out;
  double sq = 0.0;
  for (std::size_t l = 0; l < a.size(); ++l) {
    const double d = a[l] - b[l];
    out.linf = std::max(out.linf, std::abs(d));
    sq += weights[l] * d * d;
  }
  out.l2 = std::sqrt(sq);
  return out;
}

std::vector<double> total_pressure_row(const MixtureState& state, std::size_t i,
                                       const MixtureSpec& spec) {
  return total_pressure(state.n.row(i), state.deviator.row(i), spec.kappa, spec.temperature);
}

FieldDifference difference(const Snapshot& a, const MixtureSpec& spec_a,
                           const Snapshot& b, const MixtureSpec& spec_b,
                           const GridSpec& grid) {
  const auto node_w = trapezoid_weights(grid);
  const std::vector<double> half_w(grid.half_count(), grid.dx);
  FieldDifference d;
  for (std::size_t i = 0; i < a.state.n.species(); ++i) {
    d.n.push_back(difference_norm(a.state.n.row(i), b.state.n.row(i), node_w));
    d.flux.push_back(difference_norm(a.state.flux.row(i), b.state.flux.row(i), half_w));
    const auto pa = total_pressure_row(a.state, i, spec_a);
    const auto pb = total_pressure_row(b.state, i, spec_b);
    d.p_total.push_back(difference_norm(pa, pb, node_w));
  }
  return d;
}

bool same_grid(const GridSpec& a, const GridSpec& b) {
  return a.intervals == b.intervals && a.x_min == b.x_min && a.x_max == b.x_max &&
         a.dx == b.dx;
}

}  // namespace

RunReport run(const SimConfig& config) { return run(config, config.model); }

RunReport run(const SimConfig& config, Model model) {
  config.validate();
  RunReport report;
  report.model = model;
  report.grid = config.grid();
  report.spec = config.mixture_spec();
  report.dt = config.dt;
  report.cfl = cfl_number(report.spec, config.dt, report.grid.dx);
  if (report.cfl.flagged) {
    const auto msg = fmt::format("CFL number {:.6g} exceeds {}", report.cfl.value, kCflLimit);
    if (config.strict_cfl) throw StabilityError(msg);
    report.warnings.push_back(msg);
  }

  MixtureState state =
      initial_state(report.grid, config.initial_condition, report.spec, model,
                    config.initial_deviator, config.singular_tol);
  report.initial_mass = total_mass(state.n, report.grid);
  for (double m : report.initial_mass) report.equilibrium.push_back(m / report.grid.length());

  std::vector<std::size_t> snapshot_steps;
  for (double t : config.snapshot_times) snapshot_steps.push_back(*landing_step(t, config.dt));
  std::size_t next = 0;
  auto record = [&](std::size_t k) {
    while (next < snapshot_steps.size() && snapshot_steps[next] == k) {
      const double t = config.snapshot_times[next];
      report.snapshots.push_back({t, state});
      report.trace.push_back(diagnose(report, state, t));
      ++next;
    }
  };

  const StepSettings settings{config.singular_tol, config.positivity_tol};
  const std::size_t steps = config.step_count();
  record(0);
  try {
    for (std::size_t k = 1; k <= steps; ++k) {
      state = model == Model::kMs ? ms_step(state, report.spec, report.grid, config.dt, settings)
                                  : homs_step(state, report.spec, report.grid, config.dt, settings);
      state.time = static_cast<double>(k) * config.dt;
      record(k);
    }
  } catch (const Error& e) {
    report.complete = false;
    report.error = e.what();
    report.error_code = e.exit_code();
  }
  return report;
}

double FieldDifference::max_n_linf() const {
  double worst = 0.0;
  for (const auto& p : n) worst = std::max(worst, p.linf);
  return worst;
}

RunComparison compare_runs(const RunReport& a, const RunReport& b, double t) {
  if (!same_grid(a.grid, b.grid)) throw ComparisonError("compare_runs: grids differ");
  if (a.snapshots.size() != b.snapshots.size()) {
    throw ComparisonError("compare_runs: snapshot schedules differ");
  }
  for (std::size_t k = 0; k < a.snapshots.size(); ++k) {
    if (a.snapshots[k].time != b.snapshots[k].time) {
      throw ComparisonError("compare_runs: snapshot schedules differ");
    }
  }
  if (a.spec.species_count() != b.spec.species_count()) {
    throw ComparisonError("compare_runs: species counts differ");
  }
  const auto& sa = a.snapshot_near(t);
  const auto& sb = b.snapshot_near(t);
  return {sa.time, difference(sa, a.spec, sb, b.spec, a.grid)};
}

CompareReport compare(const SimConfig& config) {
  CompareReport report;
  report.ms = run(config, Model::kMs);
  report.homs = run(config, Model::kHoms);
  const std::size_t common = std::min(report.ms.snapshots.size(), report.homs.snapshots.size());
  for (std::size_t k = 0; k < common; ++k) {
    const auto& a = report.ms.snapshots[k];
    const auto& b = report.homs.snapshots[k];
    report.per_snapshot.push_back(
        {a.time, difference(a, report.ms.spec, b, report.homs.spec, report.ms.grid)});
  }
  return report;
}

SweepReport sweep_gamma(const SimConfig& config, const std::vector<double>& gammas,
                        bool toggle_self_diffusion) {
  SweepReport report;
  report.baseline = run(config, Model::kMs);
  const std::size_t s = config.mixture.species_count();
  for (double g : gammas) {
    for (int variant = 0; variant < (toggle_self_diffusion ? 2 : 1); ++variant) {
      SimConfig cfg = config;
      cfg.gamma_override = uniform_matrix(s, g);
      if (variant == 1) cfg.neglect_self_diffusion = !config.neglect_self_diffusion;
      SweepEntry entry;
      entry.gamma = g;
      entry.neglect_self_diffusion = cfg.neglect_self_diffusion;
      entry.homs = run(cfg, Model::kHoms);
      if (entry.homs.complete && report.baseline.complete) {
        entry.gap = compare_runs(report.baseline, entry.homs, config.compare_time);
      }
      report.entries.push_back(std::move(entry));
    }
  }
  report.monotone = true;
  double previous = 0.0;
  bool first = true;
  for (const auto& e : report.entries) {
    if (e.neglect_self_diffusion != config.neglect_self_diffusion) continue;
    if (!e.homs.complete) {
      report.monotone = false;
      break;
    }
    const double gap = e.gap.difference.max_n_linf();
    if (!first && !(gap < previous)) report.monotone = false;
    previous = gap;
    first = false;
  }
  return report;
}

std::string format_params(const SimConfig& config) {
  const MixtureSpec spec = config.mixture_spec();
  const std::size_t s = spec.species_count();
  std::string out;
  out += fmt::format("reference mass m_0 = {:.6g} amu, reference diffusivity D_0 = {:.6g} cm^2/s\n",
                     spec.reference_mass, spec.reference_diffusivity);
  out += fmt::format("kappa = {:.6g}, T = {:.6g}, kappa*T = {:.6g}, n_ref = {:.6g}\n", spec.kappa,
                     spec.temperature, spec.kappa_t(), spec.n_ref);
  out += fmt::format("{:<8} {:>12} {:>12} {:>12}\n", "species", "m_i", "D_ii", "|b^ii|");
  for (std::size_t i = 0; i < s; ++i) {
    out += fmt::format("{:<8} {:>12.6g} {:>12.6g} {:>12.6g}\n", spec.species_names[i],
                       spec.masses[i], spec.diffusivities(i, i), spec.cross_section_norms(i, i));
  }
  out += fmt::format("{:<8} {:>12} {:>12} {:>12}\n", "pair", "D_ij", "|b^ij|", "gamma");
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      out += fmt::format("{:<8} {:>12.6g} {:>12.6g} {:>12.6g}\n", fmt::format("{}-{}", i + 1, j + 1),
                         spec.diffusivities(i, j), spec.cross_section_norms(i, j),
                         spec.gamma(i, j));
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    out += fmt::format("gamma^{0}{0} = {1:.6g}\n", i + 1, spec.gamma(i, i));
  }
  if (spec.neglect_self_diffusion) out += "self-diffusion neglected (1/D_ii -> 0)\n";
  const auto grid = config.grid();
  const auto cfl = cfl_number(spec, config.dt, grid.dx);
  out += fmt::format("CFL = {:.6g} (dt = {:.6g}, dx = {:.6g}){}\n", cfl.value, config.dt, grid.dx,
                     cfl.flagged ? " FLAGGED: above 0.5" : "");
  return out;
}

}  // namespace msdiff

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msdiff/diagnostics.hpp"
#include "msdiff/grid.hpp"
#include "msdiff/homs_core.hpp"
#include "msdiff/mixture.hpp"
#include "msdiff/ms_core.hpp"

namespace msdiff {

struct SimConfig {
  Model model = Model::kHoms;
  PhysicalMixture mixture;
  double x_min = 0.0;
  double x_max = 1.0;
  double dx = 0.05;
  double dt = 2e-4;
  double t_end = 2.0;
  std::vector<double> snapshot_times;
  InitialCondition initial_condition;
  std::optional<DenseMatrix> gamma_override;
  bool neglect_self_diffusion = false;
  InitialDeviator initial_deviator = InitialDeviator::kAlgebraic;
  double singular_tol = kDefaultSingularTol;
  double positivity_tol = 1e-12;
  bool strict_cfl = false;
  std::string output_dir = "out";
  /// Used by sweep-gamma.
  std::vector<double> gamma_list;
  /// Snapshot time used for sweep and ordering tables.
  double compare_time = 0.0362;

  /// Dimensionless mixture with overrides applied.
  MixtureSpec mixture_spec() const;
  GridSpec grid() const;
  std::size_t step_count() const;

  /// Throws ConfigError on invariant violations.
  void validate() const;
};

std::string to_string(Model model);

/// Step index k with k dt == t (relative 1e-9), or nullopt.
std::optional<std::size_t> landing_step(double t, double dt);

struct RunReport {
  Model model = Model::kMs;
  GridSpec grid;
  MixtureSpec spec;
  double dt = 0.0;
  std::vector<Snapshot> snapshots;
  std::vector<DiagnosticRecord> trace;
  CflReport cfl;
  std::vector<double> initial_mass;
  /// Constant asymptotic state implied by the conserved masses.
  std::vector<double> equilibrium;
  std::vector<std::string> warnings;
  bool complete = true;
  std::string error;
  int error_code = 0;

  /// Snapshot whose time equals t exactly, else the nearest one.
  const Snapshot& snapshot_near(double t) const;
};

/// Integrates the configured model from t = 0 to t_end. Solver and
/// positivity failures stop the run and are reported with complete = false.
RunReport run(const SimConfig& config);

/// Same as run() with the model replaced.
RunReport run(const SimConfig& config, Model model);

struct FieldDifference {
  std::vector<NormPair> n;
  std::vector<NormPair> flux;
  std::vector<NormPair> p_total;

  double max_n_linf() const;
};

struct RunComparison {
  double time = 0.0;
  FieldDifference difference;
};

/// Nodewise (n, p_total) and half-nodewise (J) differences at the snapshot
/// nearest t. Throws ComparisonError for mismatched grids or schedules.
RunComparison compare_runs(const RunReport& a, const RunReport& b, double t);

struct CompareReport {
  RunReport ms;
  RunReport homs;
  std::vector<RunComparison> per_snapshot;
};

CompareReport compare(const SimConfig& config);

struct SweepEntry {
  double gamma = 0.0;
  bool neglect_self_diffusion = false;
  RunReport homs;
  RunComparison gap;
};

struct SweepReport {
  RunReport baseline;
  std::vector<SweepEntry> entries;
  /// Gap to MS strictly decreases along gamma_list (self-diffusion
  /// variants excluded).
  bool monotone = false;
};

/// One HOMS run per gamma plus the MS baseline. With
/// toggle_self_diffusion each gamma is also run with the opposite
/// neglect_self_diffusion setting.
SweepReport sweep_gamma(const SimConfig& config, const std::vector<double>& gammas,
                        bool toggle_self_diffusion = false);

/// Dimensionless parameter table, 6 significant figures.
std::string format_params(const SimConfig& config);

}  // namespace msdiff

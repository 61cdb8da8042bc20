#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "msdiff/grid.hpp"
#include "msdiff/mixture.hpp"

namespace msdiff {

inline constexpr double kCflLimit = 0.5;

struct CflReport {
  double value = 0.0;
  bool flagged = false;
};

/// max over all D entries (binary and self) of D dt / dx^2, flagged above 0.5.
CflReport cfl_number(const MixtureSpec& spec, double dt, double dx);

/// Trapezoidal weights for node-centred values.
std::vector<double> trapezoid_weights(const GridSpec& grid);

/// Trapezoidal integral of each species over the domain.
std::vector<double> total_mass(const SpeciesField& n, const GridSpec& grid);

struct NormPair {
  double linf = 0.0;
  double l2 = 0.0;
};

/// Distance of each species profile to the constant n_inf[i]. L2 is the
/// trapezoid-weighted continuous norm.
std::vector<NormPair> equilibrium_distance(const SpeciesField& n,
                                           std::span<const double> n_inf,
                                           const GridSpec& grid);

/// Per-snapshot diagnostics recorded during a run.
struct DiagnosticRecord {
  double time = 0.0;
  std::vector<double> species_mass;
  double closure_error = 0.0;
  std::vector<NormPair> equilibrium;
  double deviator_residual = 0.0;
  double deviator_sum_gradient = 0.0;
  double cfl = 0.0;
};

struct Snapshot {
  double time = 0.0;
  MixtureState state;
};

struct UphillMetric {
  double max_deviation = 0.0;
  double time = 0.0;
  double profile_min = 0.0;
  double profile_max = 0.0;
};

/// Largest |n^i - initial_value| over snapshots and nodes, with the profile
/// extremes at that time. Throws ConfigError on an empty history.
UphillMetric uphill_metric(std::span<const Snapshot> history, std::size_t species,
                           double initial_value);

/// max_l |n^i(x_l) - n^i(x_{N-l})|: departure from mirror symmetry of one
/// species about the domain centre.
double asymmetry(const SpeciesField& n, std::size_t species);

/// max over species and nodes of |n^i(x) - n^{S-1-i}(L - x)|, and likewise for
/// fluxes with a sign flip and for deviators.
double mirror_defect(const MixtureState& state);

}  // namespace msdiff

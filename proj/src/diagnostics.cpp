#include "msdiff/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "msdiff/errors.hpp"

namespace msdiff {

CflReport cfl_number(const MixtureSpec& spec, double dt, double dx) {
  if (!(dt > 0.0) || !(dx > 0.0)) {
    throw InvalidParameterError("cfl_number: dt and dx must be positive");
  }
  double d_max = 0.0;
  for (double d : spec.diffusivities.data()) d_max = std::max(d_max, d);
  CflReport report;
  report.value = d_max * dt / (dx * dx);
  report.flagged = report.value > kCflLimit;
  return report;
}

std::vector<double> trapezoid_weights(const GridSpec& grid) {
  std::vector<double> w(grid.node_count(), grid.dx);
  w.front() = 0.5 * grid.dx;
  w.back() = 0.5 * grid.dx;
  return w;
}

std::vector<double> total_mass(const SpeciesField& n, const GridSpec& grid) {
  const auto w = trapezoid_weights(grid);
  std::vector<double> mass(n.species(), 0.0);
  for (std::size_t i = 0; i < n.species(); ++i) {
    for (std::size_t l = 0; l < n.points(); ++l) mass[i] += w[l] * n(i, l);
  }
  return mass;
}

std::vector<NormPair> equilibrium_distance(const SpeciesField& n,
                                           std::span<const double> n_inf,
                                           const GridSpec& grid) {
  const auto w = trapezoid_weights(grid);
  std::vector<NormPair> out(n.species());
  for (std::size_t i = 0; i < n.species(); ++i) {
    double sq = 0.0;
    for (std::size_t l = 0; l < n.points(); ++l) {
      const double d = n(i, l) - n_inf[i];
      out[i].linf = std::max(out[i].linf, std::abs(d));
      sq += w[l] * d * d;
    }
    out[i].l2 = std::sqrt(sq);
  }
  return out;
}

UphillMetric uphill_metric(std::span<const Snapshot> history, std::size_t species,
                           double initial_value) {
  if (history.empty()) throw ConfigError("uphill_metric: empty history");
  UphillMetric best;
  best.time = history.front().time;
  bool first = true;
  for (const auto& snap : history) {
    const auto row = snap.state.n.row(species);
    double dev = 0.0;
    for (double v : row) dev = std::max(dev, std::abs(v - initial_value));
    if (first || dev > best.max_deviation) {
      first = false;
      best.max_deviation = dev;
      best.time = snap.time;
      best.profile_min = *std::min_element(row.begin(), row.end());
      best.profile_max = *std::max_element(row.begin(), row.end());
    }
  }
  return best;
}

double asymmetry(const SpeciesField& n, std::size_t species) {
  const std::size_t last = n.points() - 1;
  double worst = 0.0;
  for (std::size_t l = 0; l <= last; ++l) {
    worst = std::max(worst, std::abs(n(species, l) - n(species, last - l)));
  }
  return worst;
}

double mirror_defect(const MixtureState& state) {
  const std::size_t s = state.n.species();
  const std::size_t last_node = state.n.points() - 1;
  const std::size_t last_half = state.flux.points() - 1;
  double worst = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    const std::size_t k = s - 1 - i;
    for (std::size_t l = 0; l <= last_node; ++l) {
      worst = std::max(worst, std::abs(state.n(i, l) - state.n(k, last_node - l)));
      worst = std::max(worst,
                       std::abs(state.deviator(i, l) - state.deviator(k, last_node - l)));
    }
    for (std::size_t l = 0; l <= last_half; ++l) {
      worst = std::max(worst, std::abs(state.flux(i, l) + state.flux(k, last_half - l)));
    }
  }
  return worst;
}

}  // namespace msdiff

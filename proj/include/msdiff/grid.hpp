#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "msdiff/mixture.hpp"

namespace msdiff {

/// Uniform 1D staggered grid: nodes x_l (l = 0..N) carry densities and
/// deviators, half-nodes x_{l+1/2} (l = 0..N-1) carry fluxes.
struct GridSpec {
  double x_min = 0.0;
  double x_max = 1.0;
  double dx = 0.0;
  std::size_t intervals = 0;
  std::vector<double> nodes;
  std::vector<double> half_nodes;

  std::size_t node_count() const noexcept { return intervals + 1; }
  std::size_t half_count() const noexcept { return intervals; }
  double length() const noexcept { return x_max - x_min; }
};

GridSpec build_grid(double x_min, double x_max, double dx);

/// Species-major array: row i holds one value per grid point.
class SpeciesField {
 public:
  SpeciesField() = default;
  SpeciesField(std::size_t species, std::size_t points, double fill = 0.0)
      : species_(species), points_(points), data_(species * points, fill) {}

  std::size_t species() const noexcept { return species_; }
  std::size_t points() const noexcept { return points_; }

  double& operator()(std::size_t i, std::size_t l) { return data_[i * points_ + l]; }
  double operator()(std::size_t i, std::size_t l) const {
    return data_[i * points_ + l];
  }

  std::span<double> row(std::size_t i) {
    return std::span<double>(data_).subspan(i * points_, points_);
  }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_).subspan(i * points_, points_);
  }

  /// Values of every species at one point.
  std::vector<double> column(std::size_t l) const;

  std::span<const double> data() const noexcept { return data_; }

  bool operator==(const SpeciesField&) const = default;

 private:
  std::size_t species_ = 0;
  std::size_t points_ = 0;
  std::vector<double> data_;
};

/// n_ref - sum_{i<S} n^i at node l, summed in species order. Every place that
/// re-derives the last species goes through this.
double closure_value(const SpeciesField& n, std::size_t l, double n_ref);

enum class Model { kMs, kHoms };

/// Number densities and deviators at nodes, fluxes at half-nodes.
struct MixtureState {
  double time = 0.0;
  SpeciesField n;
  SpeciesField flux;
  SpeciesField deviator;

  bool operator==(const MixtureState&) const = default;
};

struct Segment {
  double from = 0.0;
  double to = 0.0;
  double value = 0.0;
};

/// How a node sitting exactly on a boundary between two segments is valued.
enum class InterfaceValue { kAverage, kLeft };

/// Piecewise-constant profile per species.
struct InitialCondition {
  std::vector<std::vector<Segment>> species_segments;
  InterfaceValue interface_value = InterfaceValue::kAverage;

  /// The same constant in every species' single segment.
  static InitialCondition uniform(std::span<const double> values, double x_min,
                                  double x_max);

  /// Species 1 fills the left half, species 3 the right half, species 2 is
  /// uniform at 0.2.
  static InitialCondition duncan_toor(double x_min = 0.0, double x_max = 1.0);

  /// Evaluates species i at x.
  double sample(std::size_t species, double x) const;
};

enum class InitialDeviator { kAlgebraic, kZero };

/// Samples the profile at nodes. The last species is reset through the
/// closure n^S = n_ref - sum_{i<S} n^i after checking node sums.
MixtureState initial_state(const GridSpec& grid, const InitialCondition& ic,
                           const MixtureSpec& spec, Model model,
                           InitialDeviator deviator = InitialDeviator::kAlgebraic,
                           double singular_tol = kDefaultSingularTol);

std::vector<double> midpoint_densities(std::span<const double> node_values);

/// Midpoint averages of every species.
SpeciesField midpoint_densities(const SpeciesField& node_values);

}  // namespace msdiff

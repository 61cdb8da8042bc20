#include "msdiff/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "msdiff/errors.hpp"
#include "msdiff/homs_core.hpp"

namespace msdiff {

GridSpec build_grid(double x_min, double x_max, double dx) {
  if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw ConfigError("grid: x_min must be below x_max");
  }
  if (!(dx > 0.0)) throw ConfigError("grid: dx must be positive");
  const double length = x_max - x_min;
  const double ratio = length / dx;
  const double rounded = std::round(ratio);
  const double residual = std::abs(rounded * dx - length);
  if (residual > 1e-9 * length) {
    throw ConfigError("grid: dx = " + std::to_string(dx) + " does not divide [" +
                      std::to_string(x_min) + ", " + std::to_string(x_max) +
                      "], residual " + std::to_string(residual));
  }
  if (rounded < 2.0) throw ConfigError("grid: at least two intervals required");

  GridSpec grid;
  grid.x_min = x_min;
  grid.x_max = x_max;
  grid.intervals = static_cast<std::size_t>(rounded);
  grid.dx = length / rounded;
  grid.nodes.resize(grid.intervals + 1);
  grid.half_nodes.resize(grid.intervals);
  for (std::size_t l = 0; l <= grid.intervals; ++l) {
    grid.nodes[l] = x_min + static_cast<double>(l) * grid.dx;
  }
  grid.nodes.back() = x_max;
  for (std::size_t l = 0; l < grid.intervals; ++l) {
    grid.half_nodes[l] = x_min + (static_cast<double>(l) + 0.5) * grid.dx;
  }
  return grid;
}

std::vector<double> SpeciesField::column(std::size_t l) const {
  std::vector<double> out(species_);
  for (std::size_t i = 0; i < species_; ++i) out[i] = (*this)(i, l);
  return out;
}

double closure_value(const SpeciesField& n, std::size_t l, double n_ref) {
  double partial = 0.0;
  for (std::size_t i = 0; i + 1 < n.species(); ++i) partial += n(i, l);
  return n_ref - partial;
}

InitialCondition InitialCondition::uniform(std::span<const double> values,
                                           double x_min, double x_max) {
  InitialCondition ic;
  for (double v : values) ic.species_segments.push_back({{x_min, x_max, v}});
  return ic;
}

InitialCondition InitialCondition::duncan_toor(double x_min, double x_max) {
  const double mid = 0.5 * (x_min + x_max);
  InitialCondition ic;
  ic.species_segments = {
      {{x_min, mid, 0.8}, {mid, x_max, 0.0}},
      {{x_min, x_max, 0.2}},
      {{x_min, mid, 0.0}, {mid, x_max, 0.8}},
  };
  return ic;
}

double InitialCondition::sample(std::size_t species, double x) const {
  const auto& segs = species_segments.at(species);
  const double eps = 1e-12 * std::max(1.0, std::abs(x));
  const Segment* left = nullptr;
  const Segment* right = nullptr;
  for (const auto& s : segs) {
    if (x >= s.from - eps && x <= s.to + eps) {
      if (left == nullptr) {
        left = &s;
      } else {
        right = &s;
      }
    }
  }
  if (left == nullptr) {
    throw ConfigError("initial_condition: species " + std::to_string(species + 1) +
                      " has no segment covering x = " + std::to_string(x));
  }
  if (right == nullptr) return left->value;
  if (right->from < left->from) std::swap(left, right);
  if (interface_value == InterfaceValue::kLeft) return left->value;
  return 0.5 * (left->value + right->value);
}

namespace {

void validate_segments(const InitialCondition& ic, const GridSpec& grid, std::size_t s) {
  if (ic.species_segments.size() != s) {
    throw ConfigError("initial_condition: expected " + std::to_string(s) +
                      " species, got " + std::to_string(ic.species_segments.size()));
  }
  const double eps = 1e-12 * std::max(1.0, grid.length());
  for (std::size_t i = 0; i < s; ++i) {
    auto segs = ic.species_segments[i];
    if (segs.empty()) {
      throw ConfigError("initial_condition[" + std::to_string(i) + "]: no segments");
    }
    std::sort(segs.begin(), segs.end(),
              [](const Segment& a, const Segment& b) { return a.from < b.from; });
    double cursor = grid.x_min;
    for (std::size_t k = 0; k < segs.size(); ++k) {
      const auto& seg = segs[k];
      const std::string where = "initial_condition[" + std::to_string(i) + "][" +
                                std::to_string(k) + "]";
      if (!(seg.to > seg.from)) throw ConfigError(where + ": empty interval");
      if (std::abs(seg.from - cursor) > eps) {
        throw ConfigError(where + ": gap or overlap at x = " + std::to_string(cursor));
      }
      if (!(seg.value >= 0.0) || !std::isfinite(seg.value)) {
        throw ConfigError(where + ": value must be nonnegative");
      }
      cursor = seg.to;
    }
    if (std::abs(cursor - grid.x_max) > eps) {
      throw ConfigError("initial_condition[" + std::to_string(i) +
                        "]: segments end at " + std::to_string(cursor) +
                        " instead of x_max");
    }
  }
}

}  // namespace

MixtureState initial_state(const GridSpec& grid, const InitialCondition& ic,
                           const MixtureSpec& spec, Model model,
                           InitialDeviator deviator, double singular_tol) {
  const std::size_t s = spec.species_count();
  validate_segments(ic, grid, s);

  MixtureState state;
  state.time = 0.0;
  state.n = SpeciesField(s, grid.node_count());
  state.flux = SpeciesField(s, grid.half_count());
  state.deviator = SpeciesField(s, grid.node_count());

  const double tol = 1e-12 * std::max(1.0, spec.n_ref);
  for (std::size_t l = 0; l < grid.node_count(); ++l) {
    double sum = 0.0;
    for (std::size_t i = 0; i < s; ++i) {
      state.n(i, l) = ic.sample(i, grid.nodes[l]);
      sum += state.n(i, l);
    }
    if (std::abs(sum - spec.n_ref) > tol) {
      throw ConfigError("initial_condition: species sum " + std::to_string(sum) +
                        " != n_ref at node " + std::to_string(l) + " (x = " +
                        std::to_string(grid.nodes[l]) + ")");
    }
    state.n(s - 1, l) = closure_value(state.n, l, spec.n_ref);
  }

  if (model == Model::kHoms && deviator == InitialDeviator::kAlgebraic) {
    state.deviator = solve_deviator_field(state.n, spec, 0.0, singular_tol);
  }
  return state;
}

std::vector<double> midpoint_densities(std::span<const double> node_values) {
  if (node_values.size() < 2) return {};
  std::vector<double> out(node_values.size() - 1);
  for (std::size_t l = 0; l + 1 < node_values.size(); ++l) {
    out[l] = 0.5 * (node_values[l + 1] + node_values[l]);
  }
  return out;
}

SpeciesField midpoint_densities(const SpeciesField& node_values) {
  const std::size_t points = node_values.points() == 0 ? 0 : node_values.points() - 1;
  SpeciesField out(node_values.species(), points);
  for (std::size_t i = 0; i < node_values.species(); ++i) {
    const auto mids = midpoint_densities(node_values.row(i));
    std::copy(mids.begin(), mids.end(), out.row(i).begin());
  }
  return out;
}

}  // namespace msdiff

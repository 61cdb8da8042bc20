#pragma once

#include <vector>

#include "msdiff/grid.hpp"
#include "msdiff/mixture.hpp"

namespace msdiff::testing {

inline MixtureSpec benchmark_spec(double gamma = 0.1) {
  return nondimensionalize(duncan_toor_mixture()).with_gamma(gamma);
}

/// Three species with m_1 = m_3 and D_12 = D_23, so the 1 <-> 3 mirror is a
/// symmetry of both models.
inline MixtureSpec symmetric_spec(double gamma = 0.1) {
  PhysicalMixture p = duncan_toor_mixture();
  p.species_names = {"A", "B", "C"};
  p.masses_amu = {10.0, 28.0, 10.0};
  auto& d = p.binary_diffusivities_cm2s;
  d(0, 1) = d(1, 0) = 0.5;
  d(1, 2) = d(2, 1) = 0.5;
  d(0, 2) = d(2, 0) = 0.9;
  return nondimensionalize(p).with_gamma(gamma);
}

inline MixtureSpec equal_diffusivity_spec(std::size_t s, double d_star) {
  PhysicalMixture p;
  p.masses_amu.assign(s, 10.0);
  p.binary_diffusivities_cm2s = uniform_matrix(s, d_star);
  p.intra_cross_section_norms.assign(s, 1.0);
  p.gamma = uniform_matrix(s, 0.1);
  return nondimensionalize(p);
}

inline MixtureState uniform_state(const GridSpec& grid, const MixtureSpec& spec,
                                  const std::vector<double>& values, Model model) {
  return initial_state(grid, InitialCondition::uniform(values, grid.x_min, grid.x_max), spec,
                       model);
}

}  // namespace msdiff::testing

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "msdiff/dense_solve.hpp"

namespace msdiff {

inline constexpr double kMonatomicKappa = 5.0 / 3.0;

/// Mixture data in laboratory units, before nondimensionalization.
struct PhysicalMixture {
  std::vector<std::string> species_names;
  std::vector<double> masses_amu;
  /// Symmetric; only the off-diagonal entries are read (cm^2/s).
  DenseMatrix binary_diffusivities_cm2s;
  /// Chosen intra-species cross-section norms ||b^ii||.
  std::vector<double> intra_cross_section_norms;
  /// Second-moment ratios gamma^ij, symmetric.
  DenseMatrix gamma;
  double kappa = kMonatomicKappa;
  double temperature = 1.0;
  double n_ref = 1.0;

  std::size_t species_count() const noexcept { return masses_amu.size(); }

  /// Throws InvalidParameterError naming the first offending field.
  void validate() const;
};

/// Dimensionless parameter closure shared by both models.
struct MixtureSpec {
  std::vector<std::string> species_names;
  std::vector<double> masses;
  /// Full symmetric matrix; the diagonal holds self-diffusivities D_ii.
  DenseMatrix diffusivities;
  DenseMatrix gamma;
  DenseMatrix cross_section_norms;
  double kappa = kMonatomicKappa;
  double temperature = 1.0;
  double n_ref = 1.0;
  /// Replaces every 1/D_ii by zero in the deviator system.
  bool neglect_self_diffusion = false;

  // Reference scales used by nondimensionalize().
  double reference_mass = 1.0;
  double reference_diffusivity = 1.0;

  std::size_t species_count() const noexcept { return masses.size(); }

  double kappa_t() const noexcept { return kappa * temperature; }

  /// 1/D_ij, honouring neglect_self_diffusion on the diagonal.
  double inverse_diffusivity(std::size_t i, std::size_t j) const {
    if (i == j && neglect_self_diffusion) return 0.0;
    return 1.0 / diffusivities(i, j);
  }

  /// Throws InvalidParameterError if any invariant is violated, including
  /// the D * ||b|| kinetic relations (relative 1e-12).
  void validate() const;

  /// Copy with every gamma^ij set to value.
  MixtureSpec with_gamma(double value) const;
  MixtureSpec with_gamma(const DenseMatrix& value) const;
};

/// ||b^ij||_L1 = (m_i + m_j) kappa T / (2 pi m_i m_j D_ij)
double cross_section_norm(double m_i, double m_j, double d_ij, double kappa,
                          double temperature);

/// D_ii = kappa T / (pi m_i ||b^ii||)
double self_diffusivity(double m_i, double intra_norm, double kappa,
                        double temperature);

/// Arithmetic-mean reference mass and diffusivity; cross sections from the
/// kinetic diffusivity relation; self-diffusivities from the intra norms.
MixtureSpec nondimensionalize(const PhysicalMixture& phys);

/// H2 / N2 / CO2 data of the two-bulb experiment, gamma = 0.1 everywhere.
PhysicalMixture duncan_toor_mixture();

DenseMatrix uniform_matrix(std::size_t k, double value);

}  // namespace msdiff

#pragma once

#include <span>
#include <vector>

#include "msdiff/dense_solve.hpp"
#include "msdiff/grid.hpp"
#include "msdiff/mixture.hpp"

namespace msdiff {

struct StepSettings {
  double singular_tol = kDefaultSingularTol;
  /// Densities in [-positivity_tol, 0) are accepted as closure roundoff.
  double positivity_tol = 1e-12;
};

/// Reduced (S-1) x (S-1) momentum system at one half-node, obtained by
/// eliminating species S through sum_i J^i = 0 and sum_i n^i = n_ref.
struct FluxSystem {
  DenseMatrix matrix;
  std::vector<double> rhs;
};

/// Row i, column j (both < S):
///   A_ij = (1/D_ij - 1/D_iS) n_i                                   (j != i)
///   A_ii = -n_ref/D_iS + sum_{k != i, k < S} (1/D_iS - 1/D_ik) n_k
/// rhs_i = grad_i. Only the first S-1 entries of grad are read.
FluxSystem assemble_flux_system(std::span<const double> n_half,
                                std::span<const double> grad,
                                const MixtureSpec& spec);

/// (S-1) x N forward differences (n_{l+1} - n_l) / dx.
SpeciesField ms_flux_rhs(const MixtureState& state, const GridSpec& grid);

/// Solves the reduced system at every half-node for the given right-hand
/// side and appends J^S = -sum_{i<S} J^i.
SpeciesField solve_flux_field(const SpeciesField& n, const SpeciesField& rhs,
                              const MixtureSpec& spec, double time,
                              double singular_tol = kDefaultSingularTol);

SpeciesField solve_fluxes(const MixtureState& state, const MixtureSpec& spec,
                          const GridSpec& grid,
                          double singular_tol = kDefaultSingularTol);

/// Residuals of all S rows of the unreduced momentum balance
///   sum_{j != i} (n_i J_j - n_j J_i) / D_ij - grad_i
/// at one half-node. grad has S entries (deviator terms included if any).
std::vector<double> momentum_residuals(std::span<const double> n_half,
                                       std::span<const double> grad,
                                       std::span<const double> flux,
                                       const MixtureSpec& spec);

/// Conservative update with zero flux through both walls. Boundary nodes
/// own a half cell. Species S is recovered from the closure. Throws
/// PositivityError for any density below -positivity_tol.
SpeciesField update_densities(const SpeciesField& n, const SpeciesField& flux,
                              double dt, const GridSpec& grid, double n_ref,
                              double time, double positivity_tol = 1e-12);

/// One explicit step of the classical model.
MixtureState ms_step(const MixtureState& state, const MixtureSpec& spec,
                     const GridSpec& grid, double dt,
                     const StepSettings& settings = {});

}  // namespace msdiff

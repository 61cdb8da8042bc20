#pragma once

#include <span>
#include <vector>

#include "msdiff/dense_solve.hpp"
#include "msdiff/grid.hpp"
#include "msdiff/mixture.hpp"
#include "msdiff/ms_core.hpp"

namespace msdiff {

/// Pointwise linear system M_hat P = beta_hat for the dimensionless
/// deviators P^i = p^i_<11> / (kappa T).
struct DeviatorSystem {
  DenseMatrix matrix;
  std::vector<double> rhs;
};

DeviatorSystem assemble_deviator_system(std::span<const double> n_node,
                                        const MixtureSpec& spec);

std::vector<double> solve_deviator(std::span<const double> n_node,
                                   const MixtureSpec& spec,
                                   double singular_tol = kDefaultSingularTol);

/// Deviators at every node; singular nodes are reported with index and time.
SpeciesField solve_deviator_field(const SpeciesField& n, const MixtureSpec& spec,
                                  double time,
                                  double singular_tol = kDefaultSingularTol);

/// (S-1) x N: density plus deviator forward differences.
SpeciesField homs_flux_rhs(const MixtureState& state, const GridSpec& grid);

/// Fluxes from current n and P, density update, then P from the new n.
MixtureState homs_step(const MixtureState& state, const MixtureSpec& spec,
                       const GridSpec& grid, double dt,
                       const StepSettings& settings = {});

/// p_tot^i = kappa T (n^i + P^i)
std::vector<double> total_pressure(std::span<const double> n_node,
                                   std::span<const double> deviator_node,
                                   double kappa, double temperature);

/// max over nodes of |M_hat P - beta_hat|_inf / (1 + |beta_hat|_inf).
double deviator_residual(const MixtureState& state, const MixtureSpec& spec);

/// max over half-nodes of |d/dx sum_i P^i|.
double deviator_sum_gradient(const MixtureState& state, const GridSpec& grid);

}  // namespace msdiff

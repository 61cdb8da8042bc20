#include "msdiff/homs_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "msdiff/errors.hpp"

namespace msdiff {

DeviatorSystem assemble_deviator_system(std::span<const double> n_node,
                                        const MixtureSpec& spec) {
  const std::size_t s = spec.species_count();
  const auto& m = spec.masses;
  DeviatorSystem sys{DenseMatrix(s), std::vector<double>(s, 0.0)};
  for (std::size_t i = 0; i < s; ++i) {
    double diag = -n_node[i] / m[i] * spec.inverse_diffusivity(i, i);
    double beta = 0.0;
    for (std::size_t j = 0; j < s; ++j) {
      const double inv_d = spec.inverse_diffusivity(i, j);
      beta += (1.0 - 3.0 * spec.gamma(i, j)) * inv_d * n_node[i] * n_node[j] /
              (2.0 * m[i]);
      if (j == i) continue;
      const double inv_mass_sum = 1.0 / (m[i] + m[j]);
      sys.matrix(i, j) = inv_mass_sum * inv_d * n_node[i];
      diag -= inv_mass_sum * (2.0 + m[j] / m[i]) * inv_d * n_node[j];
    }
    sys.matrix(i, i) = diag;
    sys.rhs[i] = beta;
  }
  return sys;
}

std::vector<double> solve_deviator(std::span<const double> n_node,
                                   const MixtureSpec& spec, double singular_tol) {
  const auto sys = assemble_deviator_system(n_node, spec);
  return solve_dense(sys.matrix, sys.rhs, singular_tol);
}

SpeciesField solve_deviator_field(const SpeciesField& n, const MixtureSpec& spec,
                                  double time, double singular_tol) {
  SpeciesField out(n.species(), n.points());
  for (std::size_t l = 0; l < n.points(); ++l) {
    const auto column = n.column(l);
    std::vector<double> p;
    try {
      p = solve_deviator(column, spec, singular_tol);
    } catch (const SingularSystemError& e) {
      std::ostringstream msg;
      msg << "deviator system singular at node " << l << ", t = " << time << " ("
          << e.what() << ")";
      throw SingularSystemError(msg.str(), e.pivot());
    }
    for (std::size_t i = 0; i < n.species(); ++i) out(i, l) = p[i];
  }
  return out;
}

SpeciesField homs_flux_rhs(const MixtureState& state, const GridSpec& grid) {
  const std::size_t s = state.n.species();
  SpeciesField rhs(s - 1, grid.half_count());
  for (std::size_t i = 0; i + 1 < s; ++i) {
    for (std::size_t l = 0; l < grid.half_count(); ++l) {
      rhs(i, l) = (state.n(i, l + 1) - state.n(i, l)) / grid.dx +
                  (state.deviator(i, l + 1) - state.deviator(i, l)) / grid.dx;
    }
  }
  return rhs;
}

MixtureState homs_step(const MixtureState& state, const MixtureSpec& spec,
                       const GridSpec& grid, double dt, const StepSettings& settings) {
  MixtureState next;
  next.time = state.time + dt;
  next.flux = solve_flux_field(state.n, homs_flux_rhs(state, grid), spec, state.time,
                               settings.singular_tol);
  next.n = update_densities(state.n, next.flux, dt, grid, spec.n_ref, next.time,
                            settings.positivity_tol);
  next.deviator = solve_deviator_field(next.n, spec, next.time, settings.singular_tol);
  return next;
}

std::vector<double> total_pressure(std::span<const double> n_node,
                                   std::span<const double> deviator_node,
                                   double kappa, double temperature) {
  std::vector<double> p(n_node.size());
  const double kt = kappa * temperature;
  for (std::size_t i = 0; i < n_node.size(); ++i) {
    p[i] = kt * n_node[i] + kt * deviator_node[i];
  }
  return p;
}

double deviator_residual(const MixtureState& state, const MixtureSpec& spec) {
  double worst = 0.0;
  for (std::size_t l = 0; l < state.n.points(); ++l) {
    const auto sys = assemble_deviator_system(state.n.column(l), spec);
    const auto p = state.deviator.column(l);
    double beta_norm = 0.0;
    for (double b : sys.rhs) beta_norm = std::max(beta_norm, std::abs(b));
    worst = std::max(worst, residual_inf(sys.matrix, p, sys.rhs) / (1.0 + beta_norm));
  }
  return worst;
}

double deviator_sum_gradient(const MixtureState& state, const GridSpec& grid) {
  double worst = 0.0;
  for (std::size_t l = 0; l < grid.half_count(); ++l) {
    double left = 0.0;
    double right = 0.0;
    for (std::size_t i = 0; i < state.deviator.species(); ++i) {
      left += state.deviator(i, l);
      right += state.deviator(i, l + 1);
    }
    worst = std::max(worst, std::abs(right - left) / grid.dx);
  }
  return worst;
}

}  // namespace msdiff

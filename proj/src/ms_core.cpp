#include "msdiff/ms_core.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "msdiff/errors.hpp"

namespace msdiff {

FluxSystem assemble_flux_system(std::span<const double> n_half,
                                std::span<const double> grad,
                                const MixtureSpec& spec) {
  const std::size_t s = spec.species_count();
  const std::size_t last = s - 1;
  FluxSystem sys{DenseMatrix(last), std::vector<double>(last)};
  for (std::size_t i = 0; i < last; ++i) {
    const double inv_is = 1.0 / spec.diffusivities(i, last);
    double diag = -spec.n_ref * inv_is;
    for (std::size_t k = 0; k < last; ++k) {
      if (k == i) continue;
      const double inv_ik = 1.0 / spec.diffusivities(i, k);
      diag += (inv_is - inv_ik) * n_half[k];
      sys.matrix(i, k) = (inv_ik - inv_is) * n_half[i];
    }
    sys.matrix(i, i) = diag;
    sys.rhs[i] = grad[i];
  }
  return sys;
}

SpeciesField ms_flux_rhs(const MixtureState& state, const GridSpec& grid) {
  const std::size_t s = state.n.species();
  SpeciesField rhs(s - 1, grid.half_count());
  for (std::size_t i = 0; i + 1 < s; ++i) {
    for (std::size_t l = 0; l < grid.half_count(); ++l) {
      rhs(i, l) = (state.n(i, l + 1) - state.n(i, l)) / grid.dx;
    }
  }
  return rhs;
}

SpeciesField solve_flux_field(const SpeciesField& n, const SpeciesField& rhs,
                              const MixtureSpec& spec, double time,
                              double singular_tol) {
  const std::size_t s = spec.species_count();
  const std::size_t halves = rhs.points();
  SpeciesField flux(s, halves);
  std::vector<double> n_half(s);
  std::vector<double> grad(s - 1);
  for (std::size_t l = 0; l < halves; ++l) {
    for (std::size_t i = 0; i < s; ++i) n_half[i] = 0.5 * (n(i, l + 1) + n(i, l));
    for (std::size_t i = 0; i + 1 < s; ++i) grad[i] = rhs(i, l);
    const auto sys = assemble_flux_system(n_half, grad, spec);
    std::vector<double> j;
    try {
      j = solve_dense(sys.matrix, sys.rhs, singular_tol);
    } catch (const SingularSystemError& e) {
      std::ostringstream msg;
      msg << "flux system singular at half-node " << l << ", t = " << time << " ("
          << e.what() << ")";
      throw SingularSystemError(msg.str(), e.pivot());
    }
    double closure = 0.0;
    for (std::size_t i = 0; i + 1 < s; ++i) {
      flux(i, l) = j[i];
      closure += j[i];
    }
    flux(s - 1, l) = -closure;
  }
  return flux;
}

SpeciesField solve_fluxes(const MixtureState& state, const MixtureSpec& spec,
                          const GridSpec& grid, double singular_tol) {
  return solve_flux_field(state.n, ms_flux_rhs(state, grid), spec, state.time,
                          singular_tol);
}

std::vector<double> momentum_residuals(std::span<const double> n_half,
                                       std::span<const double> grad,
                                       std::span<const double> flux,
                                       const MixtureSpec& spec) {
  const std::size_t s = spec.species_count();
  std::vector<double> r(s);
  for (std::size_t i = 0; i < s; ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < s; ++j) {
      if (j == i) continue;
      lhs += (n_half[i] * flux[j] - n_half[j] * flux[i]) / spec.diffusivities(i, j);
    }
    r[i] = lhs - grad[i];
  }
  return r;
}

SpeciesField update_densities(const SpeciesField& n, const SpeciesField& flux,
                              double dt, const GridSpec& grid, double n_ref,
                              double time, double positivity_tol) {
  const std::size_t s = n.species();
  const std::size_t last_node = grid.intervals;
  const double ratio = dt / grid.dx;
  SpeciesField out(s, grid.node_count());
  for (std::size_t i = 0; i + 1 < s; ++i) {
    out(i, 0) = n(i, 0) - 2.0 * ratio * flux(i, 0);
    for (std::size_t l = 1; l < last_node; ++l) {
      out(i, l) = n(i, l) - ratio * (flux(i, l) - flux(i, l - 1));
    }
    out(i, last_node) = n(i, last_node) + 2.0 * ratio * flux(i, last_node - 1);
  }
  for (std::size_t l = 0; l <= last_node; ++l) {
    out(s - 1, l) = closure_value(out, l, n_ref);
  }
  for (std::size_t l = 0; l <= last_node; ++l) {
    for (std::size_t i = 0; i < s; ++i) {
      if (out(i, l) < -positivity_tol || !std::isfinite(out(i, l))) {
        std::ostringstream msg;
        msg << "negative density " << out(i, l) << " for species " << i + 1
            << " at node " << l << " (x = " << grid.nodes[l] << "), t = " << time;
        throw PositivityError(msg.str(), time, l, i);
      }
    }
  }
  return out;
}

MixtureState ms_step(const MixtureState& state, const MixtureSpec& spec,
                     const GridSpec& grid, double dt, const StepSettings& settings) {
  MixtureState next;
  next.time = state.time + dt;
  next.flux = solve_fluxes(state, spec, grid, settings.singular_tol);
  next.n = update_densities(state.n, next.flux, dt, grid, spec.n_ref, next.time,
                            settings.positivity_tol);
  next.deviator = SpeciesField(state.n.species(), grid.node_count());
  return next;
}

}  // namespace msdiff

#include "msdiff/mixture.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "msdiff/errors.hpp"

namespace msdiff {
namespace {

void require_positive(double v, const std::string& field) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidParameterError(field + " must be positive and finite (got " +
                                std::to_string(v) + ")");
  }
}

std::string pair_name(const char* base, std::size_t i, std::size_t j) {
  return std::string(base) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

std::string item_name(const char* base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

void require_symmetric(const DenseMatrix& m, const char* field) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const double a = m(i, j);
      const double b = m(j, i);
      if (std::abs(a - b) > 1e-12 * std::max(std::abs(a), std::abs(b))) {
        throw InvalidParameterError(pair_name(field, i, j) + " is not symmetric");
      }
    }
  }
}

bool close_relative(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

void PhysicalMixture::validate() const {
  const std::size_t s = species_count();
  if (s < 2) throw InvalidParameterError("masses_amu: at least two species required");
  if (!species_names.empty() && species_names.size() != s) {
    throw InvalidParameterError("species_names: expected " + std::to_string(s) + " labels");
  }
  if (binary_diffusivities_cm2s.size() != s) {
    throw InvalidParameterError("binary_diffusivities_cm2s: expected " +
                                std::to_string(s) + "x" + std::to_string(s));
  }
  if (intra_cross_section_norms.size() != s) {
    throw InvalidParameterError("intra_cross_section_norms: expected " +
                                std::to_string(s) + " entries");
  }
  if (gamma.size() != s) {
    throw InvalidParameterError("gamma: expected " + std::to_string(s) + "x" +
                                std::to_string(s));
  }
  for (std::size_t i = 0; i < s; ++i) {
    require_positive(masses_amu[i], item_name("masses_amu", i));
    require_positive(intra_cross_section_norms[i], item_name("intra_cross_section_norms", i));
    for (std::size_t j = 0; j < s; ++j) {
      if (i != j) {
        require_positive(binary_diffusivities_cm2s(i, j),
                         pair_name("binary_diffusivities_cm2s", i, j));
      }
      const double g = gamma(i, j);
      if (!(g >= 0.0 && g <= 1.0)) {
        throw InvalidParameterError(pair_name("gamma", i, j) + " must lie in [0, 1]");
      }
    }
  }
  require_symmetric(binary_diffusivities_cm2s, "binary_diffusivities_cm2s");
  require_symmetric(gamma, "gamma");
  require_positive(kappa, "kappa");
  require_positive(temperature, "temperature");
  require_positive(n_ref, "n_ref");
}

void MixtureSpec::validate() const {
  const std::size_t s = species_count();
  if (s < 2) throw InvalidParameterError("masses: at least two species required");
  if (diffusivities.size() != s || gamma.size() != s || cross_section_norms.size() != s) {
    throw InvalidParameterError("mixture matrices must be " + std::to_string(s) + "x" +
                                std::to_string(s));
  }
  require_positive(kappa, "kappa");
  require_positive(temperature, "temperature");
  require_positive(n_ref, "n_ref");
  for (std::size_t i = 0; i < s; ++i) require_positive(masses[i], item_name("masses", i));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      require_positive(diffusivities(i, j), pair_name("diffusivities", i, j));
      require_positive(cross_section_norms(i, j), pair_name("cross_section_norms", i, j));
      const double lhs = diffusivities(i, j) * cross_section_norms(i, j);
      const double rhs =
          i == j ? kappa_t() / (std::numbers::pi * masses[i])
                 : (masses[i] + masses[j]) * kappa_t() /
                       (2.0 * std::numbers::pi * masses[i] * masses[j]);
      if (!close_relative(lhs, rhs, 1e-12)) {
        throw InvalidParameterError(pair_name("diffusivities", i, j) +
                                    " inconsistent with cross_section_norms");
      }
    }
  }
  require_symmetric(diffusivities, "diffusivities");
  require_symmetric(gamma, "gamma");
}

MixtureSpec MixtureSpec::with_gamma(double value) const {
  return with_gamma(uniform_matrix(species_count(), value));
}

MixtureSpec MixtureSpec::with_gamma(const DenseMatrix& value) const {
  if (value.size() != species_count()) {
    throw InvalidParameterError("gamma: expected " + std::to_string(species_count()) +
                                "x" + std::to_string(species_count()));
  }
  MixtureSpec out = *this;
  out.gamma = value;
  return out;
}

double cross_section_norm(double m_i, double m_j, double d_ij, double kappa,
                          double temperature) {
  require_positive(m_i, "m_i");
  require_positive(m_j, "m_j");
  require_positive(d_ij, "D_ij");
  require_positive(kappa, "kappa");
  require_positive(temperature, "temperature");
  return (m_i + m_j) * kappa * temperature / (2.0 * std::numbers::pi * m_i * m_j * d_ij);
}

double self_diffusivity(double m_i, double intra_norm, double kappa,
                        double temperature) {
  require_positive(m_i, "m_i");
  require_positive(intra_norm, "intra_norm");
  require_positive(kappa, "kappa");
  require_positive(temperature, "temperature");
  return kappa * temperature / (std::numbers::pi * m_i * intra_norm);
}

MixtureSpec nondimensionalize(const PhysicalMixture& phys) {
  phys.validate();
  const std::size_t s = phys.species_count();

  double mass_sum = 0.0;
  for (double m : phys.masses_amu) mass_sum += m;
  const double m0 = mass_sum / static_cast<double>(s);

  double d_sum = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) d_sum += phys.binary_diffusivities_cm2s(i, j);
  }
  const double d0 = d_sum / static_cast<double>(s * (s - 1) / 2);

  MixtureSpec spec;
  spec.species_names = phys.species_names;
  if (spec.species_names.empty()) {
    for (std::size_t i = 0; i < s; ++i) spec.species_names.push_back(std::to_string(i + 1));
  }
  spec.kappa = phys.kappa;
  spec.temperature = phys.temperature;
  spec.n_ref = phys.n_ref;
  spec.gamma = phys.gamma;
  spec.reference_mass = m0;
  spec.reference_diffusivity = d0;
  spec.masses.resize(s);
  for (std::size_t i = 0; i < s; ++i) spec.masses[i] = phys.masses_amu[i] / m0;

  spec.diffusivities = DenseMatrix(s);
  spec.cross_section_norms = DenseMatrix(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) {
        const double b = phys.intra_cross_section_norms[i];
        spec.cross_section_norms(i, i) = b;
        spec.diffusivities(i, i) =
            self_diffusivity(spec.masses[i], b, spec.kappa, spec.temperature);
      } else {
        const double d = phys.binary_diffusivities_cm2s(i, j) / d0;
        spec.diffusivities(i, j) = d;
        spec.cross_section_norms(i, j) = cross_section_norm(
            spec.masses[i], spec.masses[j], d, spec.kappa, spec.temperature);
      }
    }
  }
  spec.validate();
  return spec;
}

DenseMatrix uniform_matrix(std::size_t k, double value) {
  DenseMatrix m(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = value;
  return m;
}

PhysicalMixture duncan_toor_mixture() {
  PhysicalMixture phys;
  phys.species_names = {"H2", "N2", "CO2"};
  phys.masses_amu = {2.0, 28.0, 44.0};
  phys.binary_diffusivities_cm2s = DenseMatrix(3);
  auto& d = phys.binary_diffusivities_cm2s;
  d(0, 1) = d(1, 0) = 0.833;
  d(0, 2) = d(2, 0) = 0.68;
  d(1, 2) = d(2, 1) = 0.168;
  phys.intra_cross_section_norms = {1.0, 1.0, 1.0};
  phys.gamma = uniform_matrix(3, 0.1);
  phys.kappa = kMonatomicKappa;
  phys.temperature = 1.0;
  phys.n_ref = 1.0;
  return phys;
}

}  // namespace msdiff

#pragma once
// Test-only reference computations. Nothing here calls into the solver or
// assembly paths under test.

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "msdiff/mixture.hpp"

namespace msdiff::oracle {

inline std::array<double, 2> solve2(double a11, double a12, double a21, double a22,
                                    double b1, double b2) {
  const double det = a11 * a22 - a12 * a21;
  return {(a22 * b1 - a12 * b2) / det, (-a21 * b1 + a11 * b2) / det};
}

using Mat3 = std::array<std::array<double, 3>, 3>;

inline double det3(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

/// Cramer's rule.
inline std::array<double, 3> solve3(const Mat3& a, const std::array<double, 3>& b) {
  const double d = det3(a);
  std::array<double, 3> x{};
  for (int c = 0; c < 3; ++c) {
    Mat3 ac = a;
    for (int r = 0; r < 3; ++r) ac[r][c] = b[r];
    x[c] = det3(ac) / d;
  }
  return x;
}

/// Three-species reduced flux system with the four printed coefficients.
inline std::array<double, 2> printed_fluxes(const MixtureSpec& s, const std::array<double, 3>& nh,
                                            double g1, double g2) {
  const double d12 = s.diffusivities(0, 1);
  const double d13 = s.diffusivities(0, 2);
  const double d23 = s.diffusivities(1, 2);
  const double a11 = -s.n_ref / d13 + (1 / d13 - 1 / d12) * nh[1];
  const double a12 = (1 / d12 - 1 / d13) * nh[0];
  const double a21 = (1 / d12 - 1 / d23) * nh[1];
  const double a22 = -s.n_ref / d23 + (1 / d23 - 1 / d12) * nh[0];
  return solve2(a11, a12, a21, a22, g1, g2);
}

/// Deviator from the untransformed moment system: cross-section norms,
/// B^ij = gamma^ij ||b^ij||, rho = m n, p = kappa T n. Returns P = p_<11> / (kappa T).
inline std::array<double, 3> raw_deviator(const MixtureSpec& s, const std::array<double, 3>& n) {
  const double pi = std::numbers::pi;
  const double kt = s.kappa * s.temperature;
  const auto& m = s.masses;
  std::array<double, 3> rho{}, p{};
  for (int i = 0; i < 3; ++i) {
    rho[i] = m[i] * n[i];
    p[i] = kt * n[i];
  }
  Mat3 mat{};
  std::array<double, 3> beta{};
  for (int i = 0; i < 3; ++i) {
    double diag = 2 * pi * s.cross_section_norms(i, i) / (4 * m[i] * m[i]) * m[i] * rho[i];
    double bsum = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double b = s.cross_section_norms(i, j);
      const double big_b = s.gamma(i, j) * b;
      const double ms2 = (m[i] + m[j]) * (m[i] + m[j]);
      if (j != i) mat[i][j] = 2 * pi * b / ms2 * m[j] * rho[i];
      diag -= 2 * pi * b / ms2 * (2 * m[i] + m[j]) * rho[j];
      bsum += pi / ms2 *
              (b * ((m[j] - 4 * m[i]) * rho[j] * p[i] + 5 * m[j] * rho[i] * p[j]) -
               3 * m[j] * big_b * (rho[j] * p[i] + rho[i] * p[j]));
    }
    mat[i][i] = diag;
    beta[i] = bsum;
  }
  auto dev = solve3(mat, beta);
  for (auto& v : dev) v /= kt;
  return dev;
}

/// Random composition with every entry >= floor summing to n_ref.
inline std::vector<double> random_composition(std::mt19937_64& rng, std::size_t s, double n_ref,
                                              double floor = 0.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(s);
  double sum = 0.0;
  for (auto& x : v) {
    x = u(rng) + 1e-3;
    sum += x;
  }
  const double free = n_ref - floor * static_cast<double>(s);
  for (auto& x : v) x = floor + free * x / sum;
  return v;
}

/// Agreement to five significant figures (relative 5e-5).
inline bool sig5(double computed, double reference) {
  return std::abs(computed - reference) <= 5e-5 * std::abs(reference);
}

}  // namespace msdiff::oracle

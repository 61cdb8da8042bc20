#include "msdiff/dense_solve.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "msdiff/errors.hpp"

namespace msdiff {

double DenseMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> DenseMatrix::apply(std::span<const double> x) const {
  std::vector<double> y(k_, 0.0);
  for (std::size_t i = 0; i < k_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < k_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

DenseMatrix DenseMatrix::identity(std::size_t k) {
  DenseMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> solve_dense(const DenseMatrix& a, std::span<const double> b,
                                double singular_tol) {
  const std::size_t k = a.size();
  if (b.size() != k) {
    throw InvalidParameterError("solve_dense: rhs has " + std::to_string(b.size()) +
                                " entries for a " + std::to_string(k) + "x" +
                                std::to_string(k) + " matrix");
  }
  if (k > kMaxDenseSize) {
    throw InvalidParameterError("solve_dense: system size " + std::to_string(k) +
                                " exceeds " + std::to_string(kMaxDenseSize));
  }
  if (k == 0) return {};

  const double scale = a.max_abs();
  const double threshold = singular_tol * scale;
  if (scale == 0.0) {
    throw SingularSystemError("solve_dense: zero matrix", 0);
  }

  DenseMatrix lu = a;
  std::vector<double> x(b.begin(), b.end());

  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    double best = std::abs(lu(col, col));
    for (std::size_t r = col + 1; r < k; ++r) {
      const double v = std::abs(lu(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best <= threshold) {
      throw SingularSystemError(
          "solve_dense: pivot " + std::to_string(col) + " below tolerance", col);
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < k; ++j) std::swap(lu(col, j), lu(pivot, j));
      std::swap(x[col], x[pivot]);
    }
    const double diag = lu(col, col);
    for (std::size_t r = col + 1; r < k; ++r) {
      const double f = lu(r, col) / diag;
      if (f == 0.0) continue;
      lu(r, col) = 0.0;
      for (std::size_t j = col + 1; j < k; ++j) lu(r, j) -= f * lu(col, j);
      x[r] -= f * x[col];
    }
  }

  for (std::size_t i = k; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < k; ++j) s -= lu(i, j) * x[j];
    x[i] = s / lu(i, i);
  }
  return x;
}

double residual_inf(const DenseMatrix& a, std::span<const double> x,
                    std::span<const double> b) {
  const auto ax = a.apply(x);
  double r = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) r = std::max(r, std::abs(ax[i] - b[i]));
  return r;
}

}  // namespace msdiff

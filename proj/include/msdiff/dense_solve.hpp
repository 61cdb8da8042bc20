#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace msdiff {

/// Row-major k x k matrix for the small systems assembled per grid point.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t k) : k_(k), a_(k * k, 0.0) {}

  std::size_t size() const noexcept { return k_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * k_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * k_ + j]; }

  std::span<const double> data() const noexcept { return a_; }

  double max_abs() const noexcept;

  /// y = A x
  std::vector<double> apply(std::span<const double> x) const;

  static DenseMatrix identity(std::size_t k);

 private:
  std::size_t k_ = 0;
  std::vector<double> a_;
};

inline constexpr std::size_t kMaxDenseSize = 16;
inline constexpr double kDefaultSingularTol = 1e-12;

/// Solves A x = b by Gaussian elimination with row partial pivoting.
///
/// A pivot whose magnitude is below singular_tol * max|A| (or an all-zero
/// matrix) raises SingularSystemError carrying the elimination column.
std::vector<double> solve_dense(const DenseMatrix& a, std::span<const double> b,
                                double singular_tol = kDefaultSingularTol);

/// max_i |(A x - b)_i|
double residual_inf(const DenseMatrix& a, std::span<const double> x,
                    std::span<const double> b);

}  // namespace msdiff

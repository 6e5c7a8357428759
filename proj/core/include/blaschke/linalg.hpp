#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace blaschke {

// Dense row-major matrix of doubles.  All matrices in this library are tiny
// (Hankel and Bezoutian blocks of order <= a few dozen), so no effort is made
// to block or vectorise anything.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, double value = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
double max_abs(const Mat& a);

// Lower Cholesky factor of a symmetric positive definite matrix.  Returns
// false when some pivot falls at or below pivot_rel_tol times the largest
// diagonal entry, which is the library-wide notion of "not positive definite".
bool cholesky_factor(const Mat& a, Mat& lower, double pivot_rel_tol = 1e-12);

// Inverse of a symmetric positive definite matrix via its Cholesky factor.
bool spd_inverse(const Mat& a, Mat& inverse, double pivot_rel_tol = 1e-12);

// Solves a x = b for symmetric positive definite a.
bool spd_solve(const Mat& a, std::span<const double> b, std::vector<double>& x,
               double pivot_rel_tol = 1e-12);

// Determinant by LU with partial pivoting (used for small cofactor minors).
double lu_determinant(Mat a);

// Solves a x = b for a general square matrix by LU with partial pivoting.
// Returns false when a pivot vanishes.
bool lu_solve(Mat a, std::vector<double> b, std::vector<double>& x);

// Solves the primal Vandermonde system  sum_j z_j x_j^k = b_k,  k = 0..n-1,
// by Bjorck-Pereyra style progressive elimination.  Nodes must be distinct.
std::vector<double> solve_vandermonde(std::span<const double> nodes,
                                      std::vector<double> b);

}  // namespace blaschke

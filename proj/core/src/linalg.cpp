#include "blaschke/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blaschke {

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Mat transpose(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

double max_abs(const Mat& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

bool cholesky_factor(const Mat& a, Mat& lower, double pivot_rel_tol) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("cholesky needs a square matrix");
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, a(i, i));
  if (!(max_diag > 0.0)) return false;

  lower = Mat(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = a(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= lower(i, k) * lower(j, k);
      if (i == j) {
        if (sum <= pivot_rel_tol * max_diag) return false;
        lower(i, i) = std::sqrt(sum);
      } else {
        lower(i, j) = sum / lower(j, j);
      }
    }
  }
  return true;
}

namespace {

// Solves L y = e_k and then L^T x = y to build one column of the inverse.
void cholesky_column_solve(const Mat& l, std::size_t k, std::vector<double>& x) {
  const std::size_t n = l.rows();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = k; i < n; ++i) {
    double sum = (i == k) ? 1.0 : 0.0;
    for (std::size_t j = k; j < i; ++j) sum -= l(i, j) * y[j];
    y[i] = sum / l(i, i);
  }
  x.assign(n, 0.0);
  for (std::size_t ii = n; ii-- > 0;) {
    double sum = y[ii];
    for (std::size_t j = ii + 1; j < n; ++j) sum -= l(j, ii) * x[j];
    x[ii] = sum / l(ii, ii);
  }
}

}  // namespace

bool spd_inverse(const Mat& a, Mat& inverse, double pivot_rel_tol) {
  Mat l;
  if (!cholesky_factor(a, l, pivot_rel_tol)) return false;
  const std::size_t n = a.rows();
  inverse = Mat(n, n);
  std::vector<double> col;
  for (std::size_t k = 0; k < n; ++k) {
    cholesky_column_solve(l, k, col);
    for (std::size_t i = 0; i < n; ++i) inverse(i, k) = col[i];
  }
  // Symmetrise to remove round-off skew.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const double v = 0.5 * (inverse(i, j) + inverse(j, i));
      inverse(i, j) = inverse(j, i) = v;
    }
  return true;
}

bool spd_solve(const Mat& a, std::span<const double> b, std::vector<double>& x,
               double pivot_rel_tol) {
  Mat l;
  if (!cholesky_factor(a, l, pivot_rel_tol)) return false;
  const std::size_t n = a.rows();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = b[i];
    for (std::size_t j = 0; j < i; ++j) sum -= l(i, j) * y[j];
    y[i] = sum / l(i, i);
  }
  x.assign(n, 0.0);
  for (std::size_t ii = n; ii-- > 0;) {
    double sum = y[ii];
    for (std::size_t j = ii + 1; j < n; ++j) sum -= l(j, ii) * x[j];
    x[ii] = sum / l(ii, ii);
  }
  return true;
}

double lu_determinant(Mat a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant needs a square matrix");
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
    if (a(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

bool lu_solve(Mat a, std::vector<double> b, std::vector<double>& x) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("lu_solve shape mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
    if (a(pivot, k) == 0.0) return false;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(k, j));
      std::swap(b[pivot], b[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t ii = n; ii-- > 0;) {
    double sum = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) sum -= a(ii, j) * x[j];
    x[ii] = sum / a(ii, ii);
  }
  return true;
}

std::vector<double> solve_vandermonde(std::span<const double> nodes, std::vector<double> b) {
  const std::size_t n = nodes.size();
  if (b.size() != n) throw std::invalid_argument("vandermonde solve shape mismatch");
  if (n == 0) return b;
  // Transposed Newton elimination: apply U^{-T}, then L^{-T}.
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 1; i-- > k;) b[i + 1] -= nodes[k] * b[i];
  for (std::size_t k = n - 1; k-- > 0;) {
    for (std::size_t i = k + 1; i < n; ++i) {
      const double gap = nodes[i] - nodes[i - k - 1];
      if (gap == 0.0) throw std::invalid_argument("vandermonde nodes are not distinct");
      b[i] /= gap;
    }
    for (std::size_t i = k + 1; i < n; ++i) b[i - 1] -= b[i];
  }
  return b;
}

}  // namespace blaschke

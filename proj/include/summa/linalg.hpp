#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace summa::linalg {

// Dense row-major matrix. Everything in this project is sentence-count
// sized, so no sparsity and no BLAS.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Matrix transposed() const;
  Matrix operator*(const Matrix& rhs) const;

  bool operator==(const Matrix& rhs) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct SvdResult {
  Matrix u;                   // m x k, orthonormal columns
  std::vector<double> sigma;  // k descending, non-negative
  Matrix vt;                  // k x n, orthonormal rows
};

// Thin SVD by one-sided Jacobi (Hestenes) rotations, k = min(m, n).
// Singular values descending. Sign convention: the largest-magnitude entry
// of each U column is non-negative, V follows. Throws NoConvergence if the
// sweep cap is hit.
SvdResult svd(const Matrix& a, double tol = 1e-10, int max_sweeps = 100);

struct EigResult {
  std::vector<double> values;  // descending
  Matrix vectors;              // column i pairs with values[i]
};

// Cyclic Jacobi eigendecomposition of a symmetric matrix.
EigResult eigh_symmetric(const Matrix& a, double tol = 1e-12, int max_sweeps = 200);

// Gaussian elimination with partial pivoting; throws SingularSystem.
std::vector<double> solve(Matrix a, std::vector<double> b);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& v);

}  // namespace summa::linalg

#pragma once

// Small dense linear algebra: vectors, row-major matrices, a cyclic Jacobi
// eigensolver for symmetric matrices and the singular values / numeric rank
// built on top of it. Sized for n up to a few hundred.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qep {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n, double fill = 0.0);
  Vector(std::initializer_list<double> values);
  /// Throws DimensionError if any entry is NaN or infinite.
  explicit Vector(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  double& operator[](std::size_t i) noexcept { return values_[i]; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  std::span<const double> span() const noexcept { return values_; }
  std::span<double> span() noexcept { return values_; }
  const std::vector<double>& values() const noexcept { return values_; }

  auto begin() noexcept { return values_.begin(); }
  auto end() noexcept { return values_.end(); }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> values_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& a);

double dot(const Vector& a, const Vector& b);
double norm(const Vector& a);
double squared_distance(const Vector& a, const Vector& b);
double distance(const Vector& a, const Vector& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  /// Row-major entries; throws DimensionError on a size mismatch or a non-finite entry.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(entries_).subspan(i * cols_, cols_);
  }
  const std::vector<double>& entries() const noexcept { return entries_; }

  Matrix transpose() const;
  double frobenius_norm() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

/// Aᵀx without forming the transpose.
Vector transpose_times(const Matrix& a, const Vector& x);

/// u vᵀ
Matrix outer(const Vector& u, const Vector& v);

/// ½(M + Mᵀ), exactly symmetric.
Matrix symmetric_part(const Matrix& m);

/// Eigenvalues of a symmetric matrix, ascending.
///
/// Cyclic Jacobi with a fixed row-major sweep over the upper triangle, run until
/// every off-diagonal magnitude is at most tol·‖M‖_F. Throws DimensionError if M
/// is not square or |M(i,j) − M(j,i)| > tol·max(1, ‖M‖_F) for some pair.
Vector symmetric_eigenvalues(const Matrix& m, double tol = 1e-12);

/// min(rows, cols) singular values, descending, by one-sided Jacobi. tol is the
/// relative column-orthogonality threshold.
Vector singular_values(const Matrix& m, double tol = 1e-12);

/// Count of values strictly above tol·max(1, values[0]). Values must be
/// nonnegative and sorted descending (DimensionError otherwise).
std::size_t numeric_rank(const Vector& values, double tol);

}  // namespace qep

#include "qep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "qep/errors.hpp"

namespace qep {

namespace {

void require_finite(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw DimensionError(std::string(what) + ": non-finite entry");
    }
  }
}

void require_same_size(const Vector& a, const Vector& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": size " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

constexpr int kMaxJacobiSweeps = 100;

}  // namespace

Vector::Vector(std::size_t n, double fill) : values_(n, fill) {
  require_finite(values_, "Vector");
}

Vector::Vector(std::initializer_list<double> values) : values_(values) {
  require_finite(values_, "Vector");
}

Vector::Vector(std::vector<double> values) : values_(std::move(values)) {
  require_finite(values_, "Vector");
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_size(a, b, "operator+");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_size(a, b, "operator-");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator*(double s, const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

double dot(const Vector& a, const Vector& b) {
  require_same_size(a, b, "dot");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

double squared_distance(const Vector& a, const Vector& b) {
  require_same_size(a, b, "squared_distance");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double distance(const Vector& a, const Vector& b) { return std::sqrt(squared_distance(a, b)); }

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
  require_finite(entries_, "Matrix");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("Matrix: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                         " needs " + std::to_string(rows_ * cols_) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  require_finite(entries_, "Matrix");
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<double> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("Matrix::from_rows: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(entries));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : entries_) sum += v * v;
  return std::sqrt(sum);
}

namespace {

template <typename Op>
Matrix elementwise(const Matrix& a, const Matrix& b, Op op, const char* name) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(name) + ": shape mismatch");
  }
  std::vector<double> out(a.entries().size());
  std::transform(a.entries().begin(), a.entries().end(), b.entries().begin(), out.begin(), op);
  return Matrix(a.rows(), a.cols(), std::move(out));
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  return elementwise(a, b, std::plus<>{}, "operator+");
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  return elementwise(a, b, std::minus<>{}, "operator-");
}

Matrix operator*(double s, const Matrix& a) {
  std::vector<double> out(a.entries());
  for (double& v : out) v *= s;
  return Matrix(a.rows(), a.cols(), std::move(out));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector product: size mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double sum = 0.0;
    const auto row = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) sum += row[j] * x[j];
    out[i] = sum;
  }
  return out;
}

Vector transpose_times(const Matrix& a, const Vector& x) {
  if (a.rows() != x.size()) throw DimensionError("transpose_times: size mismatch");
  Vector out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += row[j] * x[i];
  }
  return out;
}

Matrix outer(const Vector& u, const Vector& v) {
  Matrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * v[j];
  return out;
}

Matrix symmetric_part(const Matrix& m) {
  if (!m.square()) throw DimensionError("symmetric_part: matrix is not square");
  Matrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s(i, i) = m(i, i);
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return s;
}

Vector symmetric_eigenvalues(const Matrix& m, double tol) {
  if (!m.square()) throw DimensionError("symmetric_eigenvalues: matrix is not square");
  const std::size_t n = m.rows();
  const double fro = m.frobenius_norm();
  const double sym_tol = tol * std::max(1.0, fro);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > sym_tol) {
        throw DimensionError("symmetric_eigenvalues: matrix is not symmetric at (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  Matrix a = symmetric_part(m);
  const double threshold = tol * fro;

  auto max_off_diagonal = [&] {
    double worst = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) worst = std::max(worst, std::abs(a(p, q)));
    return worst;
  };

  for (int sweep = 0; sweep < kMaxJacobiSweeps && max_off_diagonal() > threshold; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return Vector(std::move(eig));
}

Vector singular_values(const Matrix& m, double tol) {
  // One-sided Jacobi on the columns of the taller orientation.
  const Matrix work_src = m.rows() >= m.cols() ? m : m.transpose();
  const std::size_t rows = work_src.rows();
  const std::size_t cols = work_src.cols();
  std::vector<std::vector<double>> col(cols, std::vector<double>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) col[j][i] = work_src(i, j);

  const double eps = std::max(tol, std::numeric_limits<double>::epsilon());
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
          alpha += col[p][i] * col[p][i];
          beta += col[q][i] * col[q][i];
          gamma += col[p][i] * col[q][i];
        }
        if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < rows; ++i) {
          const double xp = col[p][i];
          const double xq = col[q][i];
          col[p][i] = c * xp - s * xq;
          col[q][i] = s * xp + c * xq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (double v : col[j]) s += v * v;
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return Vector(std::move(sv));
}

std::size_t numeric_rank(const Vector& values, double tol) {
  if (values.empty()) return 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0) throw DimensionError("numeric_rank: negative value");
    if (i > 0 && values[i] > values[i - 1]) {
      throw DimensionError("numeric_rank: values not sorted descending");
    }
  }
  const double cutoff = tol * std::max(1.0, values[0]);
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [cutoff](double v) { return v > cutoff; }));
}

}  // namespace qep

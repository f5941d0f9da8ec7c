#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace charid {

/// Dense row-major matrix of finite doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Throws NumericError on non-finite data, DimensionError on size mismatch.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const double> data() const noexcept { return data_; }

  Matrix transpose() const;
  double max_abs() const;
  double trace() const;

  /// Copies the (block_row, block_col) block of size `block` x `block`.
  Matrix block(std::size_t block_row, std::size_t block_col, std::size_t block) const;
  void set_block(std::size_t block_row, std::size_t block_col, const Matrix& b);

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(Matrix a) { return a *= -1.0; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Zero-test thresholds: a matrix is zero iff max|M_ij| <= abs_eps + rel_eps * scale.
struct Tolerance {
  double abs_eps = 1e-9;
  double rel_eps = 1e-9;

  /// Throws DomainError unless both values are strictly positive and finite.
  void validate() const;
  double threshold(double scale) const { return abs_eps + rel_eps * scale; }
  bool is_zero(const Matrix& m, double scale) const { return m.max_abs() <= threshold(scale); }

  friend bool operator==(const Tolerance&, const Tolerance&) = default;
};

/// M^k by repeated multiplication, M^0 = identity.
Matrix matrix_power(const Matrix& m, unsigned k);

/// Sum of the s diagonal d x d blocks of an (s*d) x (s*d) matrix.
Matrix partial_trace_block(const Matrix& b, std::size_t s, std::size_t d);

/// Kronecker product a (x) b; the first factor indexes blocks.
Matrix kron(const Matrix& a, const Matrix& b);

/// A B - B A.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Elementary matrix unit with a 1 at (r, c).
Matrix unit_matrix(std::size_t n, std::size_t r, std::size_t c);

/// Principal submatrix on the given index set.
Matrix submatrix(const Matrix& m, std::span<const std::size_t> idx);

/// Eigenvalues of a symmetric matrix, ascending. Only the lower triangle is read.
std::vector<double> symmetric_eigenvalues(const Matrix& m);

}  // namespace charid

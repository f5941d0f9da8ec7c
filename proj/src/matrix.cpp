#include "charid/matrix.hpp"

#include "charid/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace charid {

namespace {

void require_finite(std::span<const double> data, const char* where) {
  for (double v : data)
    if (!std::isfinite(v)) throw NumericError(std::string("non-finite entry produced by ") + where);
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shape " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DimensionError("matrix data size does not match shape");
  require_finite(data_, "construction");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged initializer list");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require_finite(data_, "construction");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  double t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::block(std::size_t br, std::size_t bc, std::size_t b) const {
  if ((br + 1) * b > rows_ || (bc + 1) * b > cols_) throw DimensionError("block index out of range");
  Matrix out(b, b);
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < b; ++c) out(r, c) = (*this)(br * b + r, bc * b + c);
  return out;
}

void Matrix::set_block(std::size_t br, std::size_t bc, const Matrix& blk) {
  const std::size_t b = blk.rows();
  if (!blk.is_square() || (br + 1) * b > rows_ || (bc + 1) * b > cols_)
    throw DimensionError("block index out of range");
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < b; ++c) (*this)(br * b + r, bc * b + c) = blk(r, c);
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  if (!std::isfinite(s)) throw NumericError("non-finite scalar");
  for (double& v : data_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                         std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Matrix out(a.rows_, b.cols_);
  // i-k-j order; representation matrices are sparse, so zero rows of a are skipped.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    double* orow = out.data_.data() + i * out.cols_;
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a.data_[i * a.cols_ + k];
      if (aik == 0.0) continue;
      const double* brow = b.data_.data() + k * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) orow[j] += aik * brow[j];
    }
  }
  require_finite(out.data_, "multiplication");
  return out;
}

void Tolerance::validate() const {
  if (!(abs_eps > 0.0) || !(rel_eps > 0.0) || !std::isfinite(abs_eps) || !std::isfinite(rel_eps))
    throw DomainError("tolerances must be strictly positive and finite");
}

Matrix matrix_power(const Matrix& m, unsigned k) {
  if (!m.is_square()) throw DimensionError("matrix_power needs a square matrix");
  Matrix out = Matrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

Matrix partial_trace_block(const Matrix& b, std::size_t s, std::size_t d) {
  if (s == 0 || d == 0 || b.rows() != s * d || b.cols() != s * d)
    throw DimensionError("partial_trace_block: " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                         " is not (" + std::to_string(s) + "*" + std::to_string(d) + ") square");
  Matrix out(d, d);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out(r, c) += b(i * d + r, i * d + c);
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
    }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix unit_matrix(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(n, n);
  m(r, c) = 1.0;
  return m;
}

Matrix submatrix(const Matrix& m, std::span<const std::size_t> idx) {
  Matrix out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r], idx[c]);
  return out;
}

std::vector<double> symmetric_eigenvalues(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("eigenvalues of a non-square matrix");
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) e(r, c) = m(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("symmetric eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace charid

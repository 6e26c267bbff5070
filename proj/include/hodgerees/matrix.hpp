#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hodgerees/scalar.hpp"

namespace hodgerees {

// Tolerance used by every float-backend rank decision that does not take an
// explicit one.  Set once before spawning workers.
double float_tolerance();
void set_float_tolerance(double tol);

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(size_t cols, std::vector<std::vector<T>> const& rows);

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  T& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  void append_row(const std::vector<T>& v);
  void append_rows(const Matrix& other);

  Matrix conj() const;
  Matrix transpose() const;
  bool is_real(double tol = 0) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(size_t cols, std::vector<std::vector<T>> const& rows) : rows_(0), cols_(cols) {
  for (auto const& r : rows) append_row(r);
}

template <class T>
void Matrix<T>::append_row(const std::vector<T>& v) {
  if (v.size() != cols_) throw DimensionMismatch("row length " + std::to_string(v.size()) + " != " + std::to_string(cols_));
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

template <class T>
void Matrix<T>::append_rows(const Matrix& other) {
  if (other.rows_ == 0) return;
  if (other.cols_ != cols_) throw DimensionMismatch("column count mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

template <class T>
Matrix<T> Matrix<T>::conj() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = ScalarTraits<T>::conj(x);
  return out;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix out(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

template <class T>
bool Matrix<T>::is_real(double tol) const {
  for (auto const& x : data_)
    if (!ScalarTraits<T>::is_real(x, tol)) return false;
  return true;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (ScalarTraits<T>::is_zero(a(r, k), 0)) continue;
      for (size_t c = 0; c < b.cols(); ++c) {
        if (ScalarTraits<T>::is_zero(b(k, c), 0)) continue;
        if constexpr (ScalarTraits<T>::exact)
          out(r, c).add_product(a(r, k), b(k, c));
        else
          out(r, c) += a(r, k) * b(k, c);
      }
    }
  return out;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() == 0 && a.cols() == 0) return b;
  Matrix<T> out = a;
  out.append_rows(b);
  return out;
}

// Reduced row-echelon form with zero rows dropped.  The float backend uses
// partial pivoting and treats |pivot| <= tol * max|entry| as zero.
template <class T>
Matrix<T> rref(const Matrix<T>& m, double tol = float_tolerance());

// Same reduction, also reporting the pivot column of each row.
template <class T>
Matrix<T> rref(const Matrix<T>& m, std::vector<size_t>& pivots, double tol = float_tolerance());

template <class T>
size_t rank(const Matrix<T>& m, double tol = float_tolerance());

// Rows spanning {x : m x = 0}.
template <class T>
Matrix<T> kernel(const Matrix<T>& m, double tol = float_tolerance());

template <class T>
Matrix<T> inverse(const Matrix<T>& g, double tol = float_tolerance());

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (ScalarTraits<T>::is_zero(a(i, j), 0)) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

template <class T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (size_t r = 0; r < b.rows(); ++r)
    for (size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

template <class T>
std::string to_string(const Matrix<T>& m);

}  // namespace hodgerees

#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "csamot/arith.hpp"
#include "csamot/error.hpp"

namespace csamot {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<T>& entries() const { return data_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

struct SmithForm {
  std::vector<Integer> diagonal;  // d1 | d2 | ..., length min(rows, cols)
  IntMatrix left;                 // unimodular, rows x rows
  IntMatrix right;                // unimodular, cols x cols
};

// Fraction-free (Bareiss) determinant.
Integer det_exact(const IntMatrix& m);

SmithForm smith_normal_form(const IntMatrix& m);

// True iff det(m) is a unit in Z[1/p : p in inverted_primes].
bool invertible_over_localization(const IntMatrix& m, const std::set<std::int64_t>& inverted_primes);

// The rectangular matrix with `diagonal` on its main diagonal.
IntMatrix diagonal_matrix(const std::vector<Integer>& diagonal, std::size_t rows, std::size_t cols);

// Rank over a field via Gaussian elimination; F needs exact division
// (Rational, or a prime-field element type).
template <class F>
std::size_t field_rank(Matrix<F> m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, rank);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c) == 0) continue;
      F factor = m(r, c) / m(rank, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

// Determinant over a field via Gaussian elimination.
template <class F>
F field_det(Matrix<F> m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "determinant of non-square matrix");
  F det = F(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return F(0);
    if (pivot != c) {
      m.swap_rows(pivot, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      F factor = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
    }
  }
  return det;
}

std::string to_string(const IntMatrix& m);

}  // namespace csamot

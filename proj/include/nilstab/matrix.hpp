#pragma once

#include "nilstab/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace nilstab {

/// Dense integer matrix, row-major, unbounded entries.
///
/// Linear maps follow the column convention throughout the library: column j
/// holds the image of the j-th basis vector.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Integer> column(std::size_t j) const;
  void set_column(std::size_t j, const std::vector<Integer> &v);

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  void negate_row(std::size_t i);

  IntMatrix operator*(const IntMatrix &rhs) const;
  IntMatrix operator+(const IntMatrix &rhs) const;
  IntMatrix operator-(const IntMatrix &rhs) const;
  IntMatrix operator-() const;
  std::vector<Integer> operator*(const std::vector<Integer> &v) const;

  friend bool operator==(const IntMatrix &a, const IntMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream &operator<<(std::ostream &os, const IntMatrix &m);

// Fraction-free Bareiss elimination.
Integer determinant(const IntMatrix &a);

// Exact inverse of a matrix with determinant +-1; throws std::domain_error otherwise.
IntMatrix inverse_unimodular(const IntMatrix &a);

IntMatrix kronecker(const IntMatrix &a, const IntMatrix &b);
IntMatrix block_diagonal(const IntMatrix &a, const IntMatrix &b);
// [a | b], same row count.
IntMatrix hconcat(const IntMatrix &a, const IntMatrix &b);

/// Strictly increasing t-tuples of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t t);

/// t-th compound matrix (matrix of t x t minors); the matrix of Lambda^t.
/// Rows and columns are indexed by increasing_tuples of the row/column counts.
IntMatrix compound(const IntMatrix &a, std::size_t t);

// Elementary matrices of GL_n(Z).
IntMatrix elementary(std::size_t n, std::size_t i, std::size_t j, long factor = 1);
IntMatrix transposition(std::size_t n, std::size_t i, std::size_t j);
IntMatrix sign_flip(std::size_t n, std::size_t i = 0);
// diag(a, 1): the block embedding GL_n -> GL_{n+1} fixing the last basis vector.
IntMatrix stabilize_matrix(const IntMatrix &a);

} // namespace nilstab

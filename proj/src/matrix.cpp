#include "nilstab/matrix.hpp"

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>

namespace nilstab {

Integer binomial(const Integer &n, unsigned long k) {
  Integer num = 1;
  Integer den = 1;
  for (unsigned long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_)
      throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long x : row)
      data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

void IntMatrix::set_column(std::size_t j, const std::vector<Integer> &v) {
  if (v.size() != rows_)
    throw std::invalid_argument("IntMatrix::set_column: size mismatch");
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto &x : data_)
    if (sgn(x) != 0)
      return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0))
        return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer &factor) {
  if (sgn(factor) == 0)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    if (sgn((*this)(src, j)) != 0)
      (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer &factor) {
  if (sgn(factor) == 0)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    if (sgn((*this)(i, src)) != 0)
      (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(i, j) = -(*this)(i, j);
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("IntMatrix product: dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer &a = (*this)(i, k);
      if (sgn(a) == 0)
        continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (sgn(rhs(k, j)) != 0)
          out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix &rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("IntMatrix sum: dimension mismatch");
  IntMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k)
    out.data_[k] += rhs.data_[k];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix &rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("IntMatrix difference: dimension mismatch");
  IntMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k)
    out.data_[k] -= rhs.data_[k];
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(*this);
  for (auto &x : out.data_)
    x = -x;
  return out;
}

std::vector<Integer> IntMatrix::operator*(const std::vector<Integer> &v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("IntMatrix * vector: dimension mismatch");
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(v[j]) != 0)
        out[i] += (*this)(i, j) * v[j];
  return out;
}

std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i)
      os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j)
        os << ',';
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

Integer determinant(const IntMatrix &a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0)
    return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0)
        ++p;
      if (p == n)
        return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix &a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("inverse_unimodular: matrix not square");
  const std::size_t n = a.rows();
  std::vector<mpq_class> m(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class & { return m[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      at(i, j) = mpq_class(a(i, j));
    at(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(at(p, col)) == 0)
      ++p;
    if (p == n)
      throw std::domain_error("inverse_unimodular: matrix is singular");
    if (p != col)
      for (std::size_t j = 0; j < 2 * n; ++j)
        std::swap(at(p, j), at(col, j));
    mpq_class pivot = at(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j)
      at(col, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(at(i, col)) == 0)
        continue;
      mpq_class f = at(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j)
        at(i, j) -= f * at(col, j);
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class &q = at(i, n + j);
      if (q.get_den() != 1)
        throw std::domain_error("inverse_unimodular: determinant is not +-1");
      inv(i, j) = q.get_num();
    }
  return inv;
}

IntMatrix kronecker(const IntMatrix &a, const IntMatrix &b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0)
        continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0)
            out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

IntMatrix block_diagonal(const IntMatrix &a, const IntMatrix &b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

IntMatrix hconcat(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() == 0)
    return b;
  if (b.cols() == 0)
    return a;
  if (a.rows() != b.rows())
    throw std::invalid_argument("hconcat: row count mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  if (t > n)
    return out;
  std::vector<std::size_t> cur(t);
  for (std::size_t i = 0; i < t; ++i)
    cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = t;
    while (i > 0 && cur[i - 1] == n - t + (i - 1))
      --i;
    if (i == 0)
      break;
    ++cur[i - 1];
    for (std::size_t j = i; j < t; ++j)
      cur[j] = cur[j - 1] + 1;
  }
  return out;
}

IntMatrix compound(const IntMatrix &a, std::size_t t) {
  const auto row_sets = increasing_tuples(a.rows(), t);
  const auto col_sets = increasing_tuples(a.cols(), t);
  IntMatrix out(row_sets.size(), col_sets.size());
  IntMatrix minor(t, t);
  for (std::size_t I = 0; I < row_sets.size(); ++I)
    for (std::size_t J = 0; J < col_sets.size(); ++J) {
      bool zero_row = false;
      for (std::size_t i = 0; i < t && !zero_row; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < t; ++j) {
          minor(i, j) = a(row_sets[I][i], col_sets[J][j]);
          any = any || sgn(minor(i, j)) != 0;
        }
        zero_row = !any;
      }
      if (!zero_row)
        out(I, J) = determinant(minor);
    }
  return out;
}

IntMatrix elementary(std::size_t n, std::size_t i, std::size_t j, long factor) {
  IntMatrix m = IntMatrix::identity(n);
  m(i, j) += factor;
  return m;
}

IntMatrix transposition(std::size_t n, std::size_t i, std::size_t j) {
  IntMatrix m = IntMatrix::identity(n);
  m.swap_rows(i, j);
  return m;
}

IntMatrix sign_flip(std::size_t n, std::size_t i) {
  IntMatrix m = IntMatrix::identity(n);
  m(i, i) = -1;
  return m;
}

IntMatrix stabilize_matrix(const IntMatrix &a) {
  return block_diagonal(a, IntMatrix::identity(1));
}

} // namespace nilstab

#include "nilstab/snf.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nilstab {

namespace {

int cmpabs(const Integer &a, const Integer &b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> least_nonzero(const IntMatrix &d, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (sgn(d(i, j)) == 0)
        continue;
      if (!best || cmpabs(d(i, j), d(best->row, best->col)) < 0)
        best = Position{i, j};
    }
  return best;
}

// Shared reduction; U and V are updated only when non-null.
void reduce(IntMatrix &d, IntMatrix *u, IntMatrix *v) {
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  Integer q;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto pivot = least_nonzero(d, t);
    if (!pivot)
      break;
    while (true) {
      d.swap_rows(t, pivot->row);
      if (u)
        u->swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      if (v)
        v->swap_cols(t, pivot->col);

      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row_multiple(i, t, -q);
        if (u)
          u->add_row_multiple(i, t, -q);
        cleared = cleared && sgn(d(i, t)) == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_col_multiple(j, t, -q);
        if (v)
          v->add_col_multiple(j, t, -q);
        cleared = cleared && sgn(d(t, j)) == 0;
      }
      if (!cleared) {
        // A remainder smaller than the pivot is left in row t or column t.
        Position best{t, t};
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(d(i, t)) != 0 && cmpabs(d(i, t), d(best.row, best.col)) < 0)
            best = Position{i, t};
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d(t, j)) != 0 && cmpabs(d(t, j), d(best.row, best.col)) < 0)
            best = Position{t, j};
        pivot = best;
        continue;
      }
      // Pivot must divide the remaining block; otherwise fold the offending
      // row into row t and repeat.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (!bad_row)
        break;
      d.add_row_multiple(t, *bad_row, 1);
      if (u)
        u->add_row_multiple(t, *bad_row, 1);
      pivot = Position{t, t};
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      if (u)
        u->negate_row(t);
    }
  }
}

} // namespace

std::size_t SNFResult::rank() const {
  std::size_t k = 0;
  while (k < std::min(D.rows(), D.cols()) && sgn(D(k, k)) != 0)
    ++k;
  return k;
}

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t k = 0; k < std::min(D.rows(), D.cols()); ++k)
    out.push_back(D(k, k));
  return out;
}

SNFResult snf(const IntMatrix &a) {
  SNFResult res{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  reduce(res.D, &res.U, &res.V);
  return res;
}

std::vector<Integer> smith_diagonal(const IntMatrix &a) {
  IntMatrix d = a;
  reduce(d, nullptr, nullptr);
  std::vector<Integer> out;
  for (std::size_t k = 0; k < std::min(d.rows(), d.cols()); ++k)
    out.push_back(d(k, k));
  return out;
}

std::string FinAbPresentation::to_string() const {
  if (is_trivial())
    return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1)
      os << '^' << free_rank;
    first = false;
  }
  for (const auto &d : invariant_factors) {
    if (!first)
      os << " + ";
    first = false;
    os << "Z/" << d;
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const FinAbPresentation &p) {
  return os << p.to_string();
}

IntMatrix column_lattice_basis(const IntMatrix &a) {
  IntMatrix m = a;
  const std::size_t k = m.rows();
  std::size_t p = 0; // next pivot column
  Integer q;
  for (std::size_t i = 0; i < k && p < m.cols(); ++i) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t j = p; j < m.cols(); ++j)
        if (sgn(m(i, j)) != 0 && (!best || cmpabs(m(i, j), m(i, *best)) < 0))
          best = j;
      if (!best)
        break;
      m.swap_cols(p, *best);
      bool done = true;
      for (std::size_t j = p + 1; j < m.cols(); ++j) {
        if (sgn(m(i, j)) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), m(i, j).get_mpz_t(), m(i, p).get_mpz_t());
        m.add_col_multiple(j, p, -q);
        done = done && sgn(m(i, j)) == 0;
      }
      if (done) {
        ++p;
        break;
      }
    }
  }
  IntMatrix out(k, p);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < p; ++j)
      out(i, j) = m(i, j);
  return out;
}

FinAbPresentation cokernel(const IntMatrix &a) { return cokernel(a, a.rows()); }

FinAbPresentation cokernel(const IntMatrix &a, std::size_t k) {
  if (a.cols() == 0)
    return FinAbPresentation::free(k);
  if (a.rows() != k)
    throw std::invalid_argument("cokernel: row count does not match ambient rank");
  IntMatrix basis = column_lattice_basis(a);
  FinAbPresentation out;
  std::size_t nonzero = 0;
  for (const auto &d : smith_diagonal(basis)) {
    if (sgn(d) == 0)
      continue;
    ++nonzero;
    if (d != 1)
      out.invariant_factors.push_back(d);
  }
  out.free_rank = k - nonzero;
  return out;
}

IntMatrix integer_kernel(const IntMatrix &a) {
  SNFResult res = snf(a);
  const std::size_t rank = res.rank();
  const std::size_t n = a.cols();
  IntMatrix out(n, n - rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = rank; j < n; ++j)
      out(i, j - rank) = res.V(i, j);
  return out;
}

bool lattice_contains(const IntMatrix &a, const std::vector<Integer> &v) {
  if (a.cols() == 0) {
    for (const auto &x : v)
      if (sgn(x) != 0)
        return false;
    return true;
  }
  if (v.size() != a.rows())
    throw std::invalid_argument("lattice_contains: dimension mismatch");
  SNFResult res = snf(column_lattice_basis(a));
  std::vector<Integer> w = res.U * v;
  const std::size_t rank = res.rank();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < rank) {
      if (!mpz_divisible_p(w[i].get_mpz_t(), res.D(i, i).get_mpz_t()))
        return false;
    } else if (sgn(w[i]) != 0) {
      return false;
    }
  }
  return true;
}

} // namespace nilstab
